#include "elementum/gallai.hpp"

#include <algorithm>
#include <queue>

namespace elementum {

namespace {

// shared endpoint of two distinct edges, or -1 when disjoint
int common_endpoint(std::pair<int, int> e, std::pair<int, int> f) {
    if (e.first == f.first || e.first == f.second) return e.first;
    if (e.second == f.first || e.second == f.second) return e.second;
    return -1;
}

int far_endpoint(std::pair<int, int> e, int shared) {
    return e.first == shared ? e.second : e.first;
}

} // namespace

GallaiGraph gallai_graph(const SimpleGraph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    SimpleGraph gal(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int w = common_endpoint(edges[i], edges[j]);
            if (w < 0) continue;
            int u = far_endpoint(edges[i], w);
            int v = far_endpoint(edges[j], w);
            if (!g.has_edge(u, v)) gal.add_edge(i, j);
        }
    return {std::move(gal), std::move(edges)};
}

ElementaryResult is_elementary(const SimpleGraph& g) {
    GallaiGraph gal = gallai_graph(g);
    ElementaryResult res;
    BipartitionResult bp = is_bipartite(gal.graph);
    if (!bp.bipartite) {
        res.elementary = false;
        for (int e : bp.odd_cycle) res.odd_gallai_cycle.push_back(gal.source_edges[e]);
        return res;
    }
    res.elementary = true;
    const int m = static_cast<int>(gal.source_edges.size());
    res.bicoloring.edges = gal.source_edges;
    res.bicoloring.tag.assign(m, EdgeTag::pink);
    // orient each component so the side containing its smallest edge id is pink
    std::vector<int> comp(m, -1);
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : gal.graph.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = s;
                    q.push(v);
                }
        }
    }
    for (int e = 0; e < m; ++e) {
        char pink_side = bp.side[comp[e]]; // comp root is the smallest id in it
        res.bicoloring.tag[e] = (bp.side[e] == pink_side) ? EdgeTag::pink : EdgeTag::green;
    }
    return res;
}

bool verify_bicoloring(const SimpleGraph& g, const EdgeBicoloring& b) {
    auto edges = g.edges();
    if (b.edges != edges || b.tag.size() != edges.size())
        throw input_error("verify_bicoloring: bicoloring does not cover the edge set");
    const int m = static_cast<int>(edges.size());
    // edge id lookup by endpoint pair
    std::vector<std::vector<int>> id(g.size(), std::vector<int>(g.size(), -1));
    for (int e = 0; e < m; ++e) id[edges[e].first][edges[e].second] = id[edges[e].second][edges[e].first] = e;
    for (int w = 0; w < g.size(); ++w) {
        const auto& nb = g.neighbors(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                if (g.has_edge(u, v)) continue; // not induced
                if (b.tag[id[w][u]] == b.tag[id[w][v]]) return false;
            }
    }
    return true;
}

} // namespace elementum
