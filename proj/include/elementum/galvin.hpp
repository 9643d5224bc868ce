#pragma once

// Constructive list edge colouring of bipartite multigraphs with lists of size
// at least the maximum degree: a proper edge colouring with exactly max-degree
// colours induces an orientation of the line graph whose kernels pick, colour
// by colour, an independent absorbing set of edges.

#include <vector>

#include "elementum/graph_core.hpp"

namespace elementum {

struct ProperEdgeColoring {
    int delta = 0;          // number of colours used, equals the max degree
    std::vector<int> color; // per edge identity, colours 1..delta
};

// Iterated two-colour alternating-path swaps; always lands on exactly
// max-degree colours.  Requires at least one edge.
ProperEdgeColoring koenig_edge_coloring(const BipartiteMultigraph& b);

// Orientation of L(B): edges meeting at a left vertex point from the higher
// base colour to the lower, edges meeting at a right vertex point from the
// lower to the higher.  A parallel pair meets at both vertices and carries
// both arcs.  Out-degree is at most delta - 1.
struct KernelOrientation {
    BipartiteMultigraph b;
    std::vector<int> color;

    bool adjacent(int e, int f) const;
    bool arc(int e, int f) const; // true when e points at f
    int out_degree(int e) const;
};

KernelOrientation kernel_orientation(const BipartiteMultigraph& b, const ProperEdgeColoring& c);

// Kernel of the orientation restricted to s: an independent set K such that
// every vertex of s \ K has an out-neighbour in K.  Computed by deferred
// acceptance (left endpoints propose by ascending colour, right endpoints keep
// the highest colour); both kernel properties are checked on the result.
std::vector<int> find_kernel(const KernelOrientation& o, const std::vector<int>& s);

// Every list must have at least max-degree colours.  Colours are processed in
// ascending order; each round colours the kernel of the still-uncoloured edges
// whose list contains the colour.  Returns a colour per edge identity.
std::vector<int> list_edge_color(const BipartiteMultigraph& b,
                                 const std::vector<std::vector<int>>& lists);

} // namespace elementum
