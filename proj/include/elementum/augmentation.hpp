#pragma once

// Elementary graphs as augmentations of line graphs of bipartite multigraphs:
// a presentation is a root multigraph plus pairwise non-incident flat edges of
// its line graph, each replaced by a cobipartite gadget.  realize() produces
// the concrete graph; build_gstar() rebuilds the root so that the last gadget
// becomes a plain clique inside the line graph.

#include <optional>
#include <utility>
#include <vector>

#include "elementum/graph_core.hpp"

namespace elementum {

// Two cliques X, Y joined by a nonempty but incomplete set of cross edges.
struct CobipartiteAugment {
    int x_size = 0;
    int y_size = 0;
    std::vector<std::pair<int, int>> cross_edges; // (index in X, index in Y)

    void validate() const;
    bool has_cross(int xi, int yj) const;
};

// An edge of a line graph given by its two root-edge identities.  The first
// entry is the endpoint the X side replaces.
struct FlatEdgeSpec {
    int x_edge = -1;
    int y_edge = -1;
};

// Root b-vertices behind a flat edge: x_edge = (v_x, v_xy), y_edge = (v_y, v_xy).
// Vertices are encoded as left index l -> l and right index r -> left + r.
struct FlatEdgeRoots {
    int vx = -1;
    int vxy = -1;
    int vy = -1;
};

struct ElementaryPresentation {
    BipartiteMultigraph b;
    std::vector<FlatEdgeSpec> flat_edges;
    std::vector<CobipartiteAugment> augments;

    void validate() const;
};

// Deterministic root identification: the shared endpoint of the two b-edges is
// v_xy; a parallel pair shares both endpoints and then the right one is v_xy.
FlatEdgeRoots flat_edge_roots(const BipartiteMultigraph& b, const FlatEdgeSpec& f);

// True iff e is an edge of g lying in no triangle.  Rejects non-edges.
bool is_flat_edge(const SimpleGraph& g, std::pair<int, int> e);

struct AugmentPlacement {
    std::vector<int> x_vertices; // realized indices, contiguous
    std::vector<int> y_vertices;
    FlatEdgeRoots roots;
};

struct AugmentLocator {
    std::vector<AugmentPlacement> placements;
};

struct AugmentAlongResult {
    SimpleGraph graph;
    std::vector<int> survivors; // new index (< offset) -> original vertex
    std::vector<int> x_vertices;
    std::vector<int> y_vertices;
};

// Replace the endpoints of flat edge e = (x, y) by the gadget h: X joins the
// old neighbours of x except y, Y joins the old neighbours of y except x.
// Untouched vertices come first in their old order, then the X block, then
// the Y block.
AugmentAlongResult augment_along(const SimpleGraph& g, std::pair<int, int> e,
                                 const CobipartiteAugment& h);

struct Realization {
    SimpleGraph graph;
    AugmentLocator locator;
    std::vector<int> survivor_edges; // realized prefix -> root edge identity
};

// Line graph of b with every flat edge replaced by its gadget.  Vertex order:
// untouched line-graph vertices in edge-identity order, then X_1, Y_1, ...
Realization realize(const ElementaryPresentation& p);

struct GStarResult {
    ElementaryPresentation presentation; // one augment fewer
    std::vector<int> xstar_edges;        // b*-edge identities forming X*
    std::vector<int> ystar_edges;        // b*-edge identities forming Y*
};

// Rebuild for the recolouring step: drop the last augment and give its two
// root edges multiplicities k1 - mu and k2, so the realization carries the
// clique X* u Y* of size k1 + k2 - mu in place of the gadget.  Requires
// mu < k2 <= k1 and (k1, k2) matching the last augment.  The clique number
// must not grow; that is checked and certified.
GStarResult build_gstar(const ElementaryPresentation& p, int k1, int k2, int mu);

} // namespace elementum
