#include "elementum/augmentation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace elementum {

void CobipartiteAugment::validate() const {
    if (x_size < 1 || y_size < 1) throw input_error("CobipartiteAugment: empty side");
    if (cross_edges.empty()) throw input_error("CobipartiteAugment: no cross edges");
    std::set<std::pair<int, int>> seen;
    for (auto [xi, yj] : cross_edges) {
        if (xi < 0 || xi >= x_size || yj < 0 || yj >= y_size)
            throw input_error("CobipartiteAugment: cross edge out of range");
        if (!seen.insert({xi, yj}).second)
            throw input_error("CobipartiteAugment: repeated cross edge");
    }
    if (static_cast<int>(cross_edges.size()) == x_size * y_size)
        throw input_error("CobipartiteAugment: X u Y must not be a clique");
}

bool CobipartiteAugment::has_cross(int xi, int yj) const {
    return std::find(cross_edges.begin(), cross_edges.end(), std::make_pair(xi, yj)) !=
           cross_edges.end();
}

FlatEdgeRoots flat_edge_roots(const BipartiteMultigraph& b, const FlatEdgeSpec& f) {
    auto [lx, rx] = b.edges[f.x_edge];
    auto [ly, ry] = b.edges[f.y_edge];
    const auto left_id = [](int l) { return l; };
    const auto right_id = [&](int r) { return b.left + r; };
    FlatEdgeRoots roots;
    if (lx == ly && rx == ry) { // parallel pair: fix the right vertex as v_xy
        roots.vxy = right_id(rx);
        roots.vx = left_id(lx);
        roots.vy = left_id(ly);
    } else if (lx == ly) {
        roots.vxy = left_id(lx);
        roots.vx = right_id(rx);
        roots.vy = right_id(ry);
    } else if (rx == ry) {
        roots.vxy = right_id(rx);
        roots.vx = left_id(lx);
        roots.vy = left_id(ly);
    } else {
        throw input_error("flat_edge_roots: edges do not meet");
    }
    return roots;
}

bool is_flat_edge(const SimpleGraph& g, std::pair<int, int> e) {
    if (!g.has_edge(e.first, e.second)) throw input_error("is_flat_edge: not an edge");
    for (int w : g.neighbors(e.first))
        if (w != e.second && g.has_edge(w, e.second)) return false;
    return true;
}

void ElementaryPresentation::validate() const {
    b.validate();
    if (flat_edges.size() != augments.size())
        throw input_error("ElementaryPresentation: flat edge / augment count mismatch");
    if (flat_edges.empty()) return;
    LineGraphResult lg = line_graph(b);
    std::set<int> used;
    for (const auto& f : flat_edges) {
        const int m = static_cast<int>(b.edges.size());
        if (f.x_edge < 0 || f.x_edge >= m || f.y_edge < 0 || f.y_edge >= m)
            throw input_error("ElementaryPresentation: flat edge id out of range");
        if (f.x_edge == f.y_edge)
            throw input_error("ElementaryPresentation: degenerate flat edge");
        if (!lg.graph.has_edge(f.x_edge, f.y_edge))
            throw input_error("ElementaryPresentation: flat pair is not a line-graph edge");
        if (!is_flat_edge(lg.graph, {f.x_edge, f.y_edge}))
            throw input_error("ElementaryPresentation: edge lies in a triangle");
        if (!used.insert(f.x_edge).second || !used.insert(f.y_edge).second)
            throw input_error("ElementaryPresentation: flat edges must be pairwise non-incident");
    }
    for (const auto& a : augments) a.validate();
}

AugmentAlongResult augment_along(const SimpleGraph& g, std::pair<int, int> e,
                                 const CobipartiteAugment& h) {
    h.validate();
    if (!is_flat_edge(g, e)) throw input_error("augment_along: edge lies in a triangle");
    auto [x, y] = e;
    AugmentAlongResult res;
    std::vector<int> new_index(g.size(), -1);
    for (int v = 0; v < g.size(); ++v)
        if (v != x && v != y) {
            new_index[v] = static_cast<int>(res.survivors.size());
            res.survivors.push_back(v);
        }
    const int offset = static_cast<int>(res.survivors.size());
    SimpleGraph out(offset + h.x_size + h.y_size);
    for (auto [u, v] : g.edges())
        if (new_index[u] >= 0 && new_index[v] >= 0) out.add_edge(new_index[u], new_index[v]);
    for (int i = 0; i < h.x_size; ++i) res.x_vertices.push_back(offset + i);
    for (int j = 0; j < h.y_size; ++j) res.y_vertices.push_back(offset + h.x_size + j);
    for (int i = 0; i < h.x_size; ++i)
        for (int j = i + 1; j < h.x_size; ++j) out.add_edge(res.x_vertices[i], res.x_vertices[j]);
    for (int i = 0; i < h.y_size; ++i)
        for (int j = i + 1; j < h.y_size; ++j) out.add_edge(res.y_vertices[i], res.y_vertices[j]);
    for (auto [xi, yj] : h.cross_edges) out.add_edge(res.x_vertices[xi], res.y_vertices[yj]);
    for (int w : g.neighbors(x))
        if (w != y)
            for (int xv : res.x_vertices) out.add_edge(xv, new_index[w]);
    for (int w : g.neighbors(y))
        if (w != x)
            for (int yv : res.y_vertices) out.add_edge(yv, new_index[w]);
    res.graph = std::move(out);
    return res;
}

Realization realize(const ElementaryPresentation& p) {
    p.validate();
    LineGraphResult lg = line_graph(p.b);
    const int m = static_cast<int>(p.b.edges.size());
    const int h = static_cast<int>(p.augments.size());

    std::vector<int> block_of_edge(m, -1); // augment index, or -1 for survivors
    std::vector<char> is_x_edge(m, 0);
    for (int i = 0; i < h; ++i) {
        block_of_edge[p.flat_edges[i].x_edge] = i;
        block_of_edge[p.flat_edges[i].y_edge] = i;
        is_x_edge[p.flat_edges[i].x_edge] = 1;
    }

    Realization res;
    for (int e = 0; e < m; ++e)
        if (block_of_edge[e] < 0) res.survivor_edges.push_back(e);
    int total = static_cast<int>(res.survivor_edges.size());
    for (const auto& a : p.augments) total += a.x_size + a.y_size;

    // per realized vertex: the root edge it descends from, plus its block role
    struct Origin {
        int edge;
        int augment; // -1 for survivors
        bool x_side;
        int pos;
    };
    std::vector<Origin> origin;
    origin.reserve(total);
    for (int e : res.survivor_edges) origin.push_back({e, -1, false, 0});
    for (int i = 0; i < h; ++i) {
        AugmentPlacement place;
        place.roots = flat_edge_roots(p.b, p.flat_edges[i]);
        for (int t = 0; t < p.augments[i].x_size; ++t) {
            place.x_vertices.push_back(static_cast<int>(origin.size()));
            origin.push_back({p.flat_edges[i].x_edge, i, true, t});
        }
        for (int t = 0; t < p.augments[i].y_size; ++t) {
            place.y_vertices.push_back(static_cast<int>(origin.size()));
            origin.push_back({p.flat_edges[i].y_edge, i, false, t});
        }
        res.locator.placements.push_back(std::move(place));
    }

    SimpleGraph g(total);
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v) {
            const Origin& a = origin[u];
            const Origin& c = origin[v];
            bool edge;
            if (a.augment >= 0 && a.augment == c.augment) {
                if (a.x_side == c.x_side)
                    edge = true; // inside one block: clique
                else if (a.x_side)
                    edge = p.augments[a.augment].has_cross(a.pos, c.pos);
                else
                    edge = p.augments[a.augment].has_cross(c.pos, a.pos);
            } else {
                // inherited from the line graph; a block stands in for its root edge
                edge = lg.graph.has_edge(a.edge, c.edge);
            }
            if (edge) g.add_edge(u, v);
        }
    res.graph = std::move(g);
    return res;
}

GStarResult build_gstar(const ElementaryPresentation& p, int k1, int k2, int mu) {
    p.validate();
    if (p.augments.empty()) throw input_error("build_gstar: presentation has no augments");
    const CobipartiteAugment& last = p.augments.back();
    if (k1 != last.x_size || k2 != last.y_size)
        throw input_error("build_gstar: sizes do not match the last augment");
    if (k2 > k1) throw input_error("build_gstar: requires k2 <= k1");
    if (mu < 0 || mu >= k2) throw input_error("build_gstar: requires 0 <= mu < k2");

    const FlatEdgeSpec last_flat = p.flat_edges.back();
    GStarResult res;
    res.presentation.b = p.b;
    res.presentation.flat_edges.assign(p.flat_edges.begin(), p.flat_edges.end() - 1);
    res.presentation.augments.assign(p.augments.begin(), p.augments.end() - 1);
    res.xstar_edges.push_back(last_flat.x_edge);
    res.ystar_edges.push_back(last_flat.y_edge);
    for (int t = 1; t < k1 - mu; ++t) {
        res.xstar_edges.push_back(static_cast<int>(res.presentation.b.edges.size()));
        res.presentation.b.edges.push_back(p.b.edges[last_flat.x_edge]);
    }
    for (int t = 1; t < k2; ++t) {
        res.ystar_edges.push_back(static_cast<int>(res.presentation.b.edges.size()));
        res.presentation.b.edges.push_back(p.b.edges[last_flat.y_edge]);
    }
    res.presentation.validate();

    const size_t before = max_clique_desk(realize(p).graph).size();
    const size_t after = max_clique_desk(realize(res.presentation).graph).size();
    if (after > before)
        throw certificate_error("internal", "build_gstar: clique number grew from " +
                                                std::to_string(before) + " to " +
                                                std::to_string(after));
    return res;
}

} // namespace elementum
