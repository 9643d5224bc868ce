#pragma once

// Foundational graph types and the exact combinatorial primitives everything
// else is built on.  All algorithms here are exact and deterministic; they are
// meant for desk-scale inputs, not bulk data.

#include <utility>
#include <vector>

#include "elementum/errors.hpp"

namespace elementum {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v); // rejects loops and out-of-range; repeated adds are no-ops
    const std::vector<int>& neighbors(int v) const; // sorted ascending
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const; // lexicographic, u < v

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> nbr_;
};

// Left/right vertices live in separate index spaces.  The edge list may repeat
// a pair; multiplicity is the repeat count and the position in the list is the
// edge identity.
struct BipartiteMultigraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const; // throws input_error on out-of-range endpoints
    int degree_left(int l) const;
    int degree_right(int r) const;
    int max_degree() const; // with multiplicity
};

// Bijection between the vertices of a line graph and the edge identities of
// its root multigraph.
struct EdgeIndexMap {
    std::vector<int> vertex_to_edge;
    std::vector<int> edge_to_vertex;
};

struct LineGraphResult {
    SimpleGraph graph;
    EdgeIndexMap map;
};

// Vertices of the result are the edge identities of b; two vertices are
// adjacent iff the corresponding edges share an endpoint (so parallel edges
// are adjacent).  Requires at least one edge.
LineGraphResult line_graph(const BipartiteMultigraph& b);

struct BipartitionResult {
    bool bipartite = false;
    std::vector<char> side;     // 0/1 per vertex, valid when bipartite
    std::vector<int> odd_cycle; // simple cycle of odd length, valid when not
};

BipartitionResult is_bipartite(const SimpleGraph& g);

// Maximum matching via augmenting paths.  part_a/part_b must partition V(g)
// and every edge must cross; otherwise the input is rejected.  Result pairs
// are (a-vertex, b-vertex), sorted.
std::vector<std::pair<int, int>> max_matching_bipartite(const SimpleGraph& g,
                                                        const std::vector<int>& part_a,
                                                        const std::vector<int>& part_b);

// Exact maximum clique: branch and bound with a greedy colouring bound and
// lexicographic expansion, so results are reproducible.  Desk scale only.
std::vector<int> max_clique_desk(const SimpleGraph& g);

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> original; // new index -> original vertex
};

// s must list distinct vertices of g; their order defines the new indexing.
InducedSubgraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& s);

SimpleGraph complement(const SimpleGraph& g);

} // namespace elementum
