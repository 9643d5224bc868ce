#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elementum/augmentation.hpp"
#include "elementum/graph_core.hpp"

namespace elementum {

BipartiteMultigraph random_bipartite_multigraph(int left, int right, int m, int max_multiplicity,
                                                std::uint64_t seed);

enum class AugmentShape { matching, general };

// Flat edges are picked greedily in lexicographic order (the randomness lives
// in b and in the augments), so a presentation is pinned down by (b, h, seed).
ElementaryPresentation random_presentation(const BipartiteMultigraph& b, int h,
                                           std::uint64_t seed, AugmentShape shape);

struct PeculiarSpec {
    std::array<int, 3> a_sizes{1, 1, 1};
    std::array<int, 3> b_sizes{1, 1, 1};
    std::array<int, 3> q_sizes{1, 1, 1};
    // removed[i]: pairs (index into A_i, index into B_{i+1 mod 3}); each nonempty
    std::array<std::vector<std::pair<int, int>>, 3> removed;
};

struct PeculiarGraph {
    SimpleGraph graph;
    std::array<std::vector<int>, 3> a_parts, b_parts, q_parts;
};

PeculiarGraph peculiar_graph(const PeculiarSpec& spec);

// claw | c5 | c7_complement | p3 | k<n>
SimpleGraph named_graph(const std::string& name);

} // namespace elementum
