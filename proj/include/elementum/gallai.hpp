#pragma once

// Recognition of elementary graphs: a graph is elementary iff its edges can be
// 2-coloured so that every induced path on three vertices picks up both
// colours, which happens exactly when the Gallai graph is bipartite.

#include <utility>
#include <vector>

#include "elementum/graph_core.hpp"

namespace elementum {

// Vertices are the edge identities of the source graph (in SimpleGraph::edges
// order); two are adjacent iff the edges share exactly one endpoint and the
// far endpoints are non-adjacent, i.e. the edges span an induced P3.
struct GallaiGraph {
    SimpleGraph graph;
    std::vector<std::pair<int, int>> source_edges; // back-map to the source
};

GallaiGraph gallai_graph(const SimpleGraph& g);

enum class EdgeTag { pink, green };

struct EdgeBicoloring {
    std::vector<std::pair<int, int>> edges; // same order as SimpleGraph::edges
    std::vector<EdgeTag> tag;
};

struct ElementaryResult {
    bool elementary = false;
    EdgeBicoloring bicoloring;                        // valid when elementary
    std::vector<std::pair<int, int>> odd_gallai_cycle; // source edges, cyclic order
};

// Tag assignment is canonical: within each Gallai component the side holding
// the smallest edge identity is pink; isolated Gallai vertices are pink.
ElementaryResult is_elementary(const SimpleGraph& g);

// True iff every induced P3 of g sees both tags.  The bicoloring must cover
// exactly the edges of g.
bool verify_bicoloring(const SimpleGraph& g, const EdgeBicoloring& b);

} // namespace elementum
