#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace elementum {

// Rejected input: the caller violated a documented precondition.
// The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A checked invariant that theory says cannot fail did fail.  This is never
// swallowed; the CLI maps it to exit code 3 and emits a certificate document.
struct certificate_error : std::runtime_error {
    std::string kind;
    certificate_error(std::string kind_, const std::string& message)
        : std::runtime_error(message), kind(std::move(kind_)) {}
};

} // namespace elementum
