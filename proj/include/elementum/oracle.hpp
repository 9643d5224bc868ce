#pragma once

#include <cstdint>
#include <optional>

#include "elementum/gallai.hpp"
#include "elementum/graph_core.hpp"
#include "elementum/list_coloring.hpp"

namespace elementum {

// Ground-truth brute force, implemented independently of the constructive
// machinery so the two sides can check each other.

int chromatic_number_exact(const SimpleGraph& g, int max_n = 20);

std::optional<Coloring> is_list_colorable_exact(const SimpleGraph& g, const ListAssignment& l,
                                                int max_n = 20);

enum class ChoosabilityMode { exhaustive, sampled };

struct ChoosabilityVerdict {
    ChoosabilityMode mode = ChoosabilityMode::exhaustive;
    int k = 0;
    int universe_size = 0;
    long long trials = 0; // assignments actually examined
    bool holds = true;
    std::optional<ListAssignment> counterexample;
    std::uint64_t seed = 0; // meaningful in sampled mode only
};

// exhaustive: every assignment of k-subsets of {0..universe_size-1}, vertex by
// vertex in lexicographic order, within the stated budget of assignments.
// sampled: `trials` independent draws; trial i derives its stream from seed+i,
// so the verdict does not depend on how trials are scheduled across threads.
ChoosabilityVerdict choosability_check(const SimpleGraph& g, int k, int universe_size,
                                       ChoosabilityMode mode, long long trials = 0,
                                       std::uint64_t seed = 0, int jobs = 1,
                                       long long exhaustive_budget = 20'000'000);

std::optional<EdgeBicoloring> elementary_bruteforce(const SimpleGraph& g, int max_edges = 20);

bool perfectness_desk(const SimpleGraph& g, int max_n = 10);

// first clique (in depth-first vertex order) whose merged lists are smaller
// than the clique itself — a pigeonhole proof of non-colorability
std::optional<CliqueListViolation> find_list_violation(const SimpleGraph& g,
                                                       const ListAssignment& l, int max_n = 20);

} // namespace elementum
