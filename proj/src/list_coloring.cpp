#include "elementum/list_coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "elementum/galvin.hpp"

namespace elementum {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return sorted_unique(out);
}

void require_clique(const SimpleGraph& g, const std::vector<int>& vs, const char* what,
                    bool internal) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) {
                if (internal) throw certificate_error("internal", std::string(what) + " is not a clique");
                throw input_error(std::string(what) + " is not a clique");
            }
}

// Exhaustive deterministic list colouring of a vertex subset against a fixed
// partial colouring of the rest: most constrained vertex first, lowest colour
// first.
struct SubsetColorer {
    const SimpleGraph& g;
    std::vector<int> verts;
    std::vector<std::vector<int>> base; // per position, filtered by the fixed colours
    std::vector<int> colour;

    SubsetColorer(const SimpleGraph& graph, const std::vector<int>& vs,
                  const std::map<int, std::vector<int>>& lists, const Coloring& fixed)
        : g(graph), verts(vs) {
        std::sort(verts.begin(), verts.end());
        base.resize(verts.size());
        colour.assign(verts.size(), -1);
        std::set<int> inside(verts.begin(), verts.end());
        for (size_t i = 0; i < verts.size(); ++i) {
            std::set<int> banned;
            for (int w : g.neighbors(verts[i]))
                if (!inside.count(w) && fixed[w] >= 0) banned.insert(fixed[w]);
            auto it = lists.find(verts[i]);
            if (it != lists.end())
                for (int col : sorted_unique(it->second))
                    if (!banned.count(col)) base[i].push_back(col);
        }
    }

    std::vector<int> available(size_t i) const {
        std::set<int> banned;
        for (size_t j = 0; j < verts.size(); ++j)
            if (colour[j] >= 0 && g.has_edge(verts[i], verts[j])) banned.insert(colour[j]);
        std::vector<int> out;
        for (int col : base[i])
            if (!banned.count(col)) out.push_back(col);
        return out;
    }

    bool solve() {
        int pick = -1;
        size_t fewest = 0;
        for (size_t i = 0; i < verts.size(); ++i) {
            if (colour[i] >= 0) continue;
            size_t k = available(i).size();
            if (pick < 0 || k < fewest) {
                pick = static_cast<int>(i);
                fewest = k;
            }
        }
        if (pick < 0) return true;
        for (int col : available(pick)) {
            colour[pick] = col;
            if (solve()) return true;
            colour[pick] = -1;
        }
        return false;
    }

    std::optional<std::map<int, int>> run() {
        if (!solve()) return std::nullopt;
        std::map<int, int> out;
        for (size_t i = 0; i < verts.size(); ++i) out[verts[i]] = colour[i];
        return out;
    }
};

std::optional<std::map<int, int>> backtrack_subset(const SimpleGraph& g,
                                                   const std::vector<int>& verts,
                                                   const std::map<int, std::vector<int>>& lists,
                                                   const Coloring& fixed) {
    SubsetColorer colorer(g, verts, lists, fixed);
    return colorer.run();
}

// clique indicator per subset mask of `verts`, via one-bit peeling
std::vector<char> clique_masks(const SimpleGraph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    if (k > 22) throw input_error("gadget too large for exact clique enumeration");
    std::vector<unsigned> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= 1u << j;
    std::vector<char> is_clique(static_cast<size_t>(1) << k, 0);
    is_clique[0] = 1;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int v = __builtin_ctz(mask);
        unsigned rest = mask & (mask - 1);
        is_clique[mask] = is_clique[rest] && ((rest & adj[v]) == rest);
    }
    return is_clique;
}

} // namespace

bool verify_coloring(const SimpleGraph& g, const ListAssignment& l, const Coloring& c) {
    const int n = g.size();
    if (static_cast<int>(c.size()) != n) throw input_error("verify_coloring: colouring size mismatch");
    if (static_cast<int>(l.lists.size()) != n) throw input_error("verify_coloring: list count mismatch");
    for (int v = 0; v < n; ++v)
        if (c[v] < 0) throw input_error("verify_coloring: partial colouring");
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    for (int v = 0; v < n; ++v)
        if (std::find(l.lists[v].begin(), l.lists[v].end(), c[v]) == l.lists[v].end())
            return false;
    return true;
}

std::optional<CliqueListViolation> clique_list_check(const SimpleGraph& g, const ListAssignment& l,
                                                     const std::vector<int>& q) {
    std::vector<int> clique = sorted_unique(q);
    if (clique.size() != q.size()) throw input_error("clique_list_check: repeated vertex");
    for (int v : clique)
        if (v < 0 || v >= g.size()) throw input_error("clique_list_check: vertex out of range");
    require_clique(g, clique, "clique_list_check: q", false);
    std::set<int> merged;
    for (int v : clique) merged.insert(l.lists[v].begin(), l.lists[v].end());
    if (merged.size() < clique.size())
        return CliqueListViolation{clique, static_cast<int>(merged.size())};
    return std::nullopt;
}

std::pair<int, int> cobipartite_clique_number(const std::vector<int>& x_set,
                                              const std::vector<int>& y_set,
                                              const SimpleGraph& g) {
    for (int x : x_set)
        for (int y : y_set)
            if (x == y) throw input_error("cobipartite_clique_number: parts overlap");
    require_clique(g, x_set, "cobipartite_clique_number: X", false);
    require_clique(g, y_set, "cobipartite_clique_number: Y", false);
    const int nx = static_cast<int>(x_set.size());
    const int ny = static_cast<int>(y_set.size());
    SimpleGraph non_edges(nx + ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (!g.has_edge(x_set[i], y_set[j])) non_edges.add_edge(i, nx + j);
    std::vector<int> pa(nx), pb(ny);
    for (int i = 0; i < nx; ++i) pa[i] = i;
    for (int j = 0; j < ny; ++j) pb[j] = nx + j;
    const int mu = static_cast<int>(max_matching_bipartite(non_edges, pa, pb).size());
    return {nx + ny - mu, mu};
}

std::map<int, std::vector<int>> restrict_lists(const ListAssignment& l, const Coloring& c,
                                               const std::vector<int>& x_set,
                                               const std::vector<int>& y_set,
                                               const std::vector<int>& n_x,
                                               const std::vector<int>& n_y) {
    std::set<int> used_x, used_y;
    for (int v : n_x) {
        if (c[v] < 0) throw input_error("restrict_lists: uncoloured vertex in N_X");
        used_x.insert(c[v]);
    }
    for (int v : n_y) {
        if (c[v] < 0) throw input_error("restrict_lists: uncoloured vertex in N_Y");
        used_y.insert(c[v]);
    }
    std::map<int, std::vector<int>> out;
    for (int x : x_set) {
        std::vector<int> kept;
        for (int col : sorted_unique(l.lists[x]))
            if (!used_x.count(col)) kept.push_back(col);
        out[x] = std::move(kept);
    }
    for (int y : y_set) {
        std::vector<int> kept;
        for (int col : sorted_unique(l.lists[y]))
            if (!used_y.count(col)) kept.push_back(col);
        out[y] = std::move(kept);
    }
    return out;
}

std::optional<TightenResult> tighten_to_matching(const std::vector<int>& x_set,
                                                 const std::vector<int>& y_set,
                                                 const SimpleGraph& g) {
    require_clique(g, x_set, "tighten_to_matching: X", false);
    require_clique(g, y_set, "tighten_to_matching: Y", false);
    const int nx = static_cast<int>(x_set.size());
    const int ny = static_cast<int>(y_set.size());
    SimpleGraph non_edges(nx + ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (!g.has_edge(x_set[i], y_set[j])) non_edges.add_edge(i, nx + j);
    std::vector<int> pa(nx), pb(ny);
    for (int i = 0; i < nx; ++i) pa[i] = i;
    for (int j = 0; j < ny; ++j) pb[j] = nx + j;
    auto matching = max_matching_bipartite(non_edges, pa, pb);
    if (static_cast<int>(matching.size()) < ny) return std::nullopt;
    std::set<std::pair<int, int>> keep;
    TightenResult res;
    for (auto [i, jj] : matching) {
        keep.insert({i, jj - nx});
        res.matching.emplace_back(x_set[i], y_set[jj - nx]);
    }
    std::sort(res.matching.begin(), res.matching.end());
    res.graph = g;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (!g.has_edge(x_set[i], y_set[j]) && !keep.count({i, j}))
                res.graph.add_edge(x_set[i], y_set[j]);
    return res;
}

std::map<int, int> color_matching_cobipartite(const SimpleGraph& h_graph,
                                              const std::vector<int>& x_set,
                                              const std::vector<int>& y_set,
                                              const std::map<int, std::vector<int>>& lists) {
    if (x_set.size() < y_set.size())
        throw input_error("color_matching_cobipartite: requires |X| >= |Y|");
    require_clique(h_graph, x_set, "color_matching_cobipartite: X", false);
    require_clique(h_graph, y_set, "color_matching_cobipartite: Y", false);
    std::vector<int> x_hit(x_set.size(), 0), y_hit(y_set.size(), 0);
    int non_edges = 0;
    for (size_t i = 0; i < x_set.size(); ++i)
        for (size_t j = 0; j < y_set.size(); ++j)
            if (!h_graph.has_edge(x_set[i], y_set[j])) {
                ++non_edges;
                ++x_hit[i];
                ++y_hit[j];
            }
    if (non_edges != static_cast<int>(y_set.size()))
        throw input_error("color_matching_cobipartite: cross non-edges must number |Y|");
    for (int hits : x_hit)
        if (hits > 1) throw input_error("color_matching_cobipartite: non-edges are not a matching");
    for (int hits : y_hit)
        if (hits != 1) throw input_error("color_matching_cobipartite: non-edges must cover Y");
    for (int x : x_set) {
        auto it = lists.find(x);
        if (it == lists.end() || sorted_unique(it->second).size() < x_set.size())
            throw input_error("color_matching_cobipartite: X list smaller than |X|");
    }
    for (int y : y_set) {
        auto it = lists.find(y);
        if (it == lists.end() || sorted_unique(it->second).size() < y_set.size())
            throw input_error("color_matching_cobipartite: Y list smaller than |Y|");
    }
    Coloring fixed(h_graph.size(), -1);
    auto out = backtrack_subset(h_graph, sorted_union(x_set, y_set), lists, fixed);
    if (!out)
        throw certificate_error("internal",
                                "color_matching_cobipartite: exhausted despite preconditions");
    return *out;
}

std::optional<std::pair<int, int>> choose_blocking_pair(
    const std::vector<int>& x_set, const std::vector<int>& y_set, const SimpleGraph& g,
    const std::map<int, std::vector<int>>& restricted) {
    (void)restricted; // the obstruction travels with the call; selection is structural
    std::vector<int> xy = sorted_union(x_set, y_set);
    const int k = static_cast<int>(xy.size());
    std::vector<char> is_clique = clique_masks(g, xy);
    int best = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask)
        if (is_clique[mask]) best = std::max(best, __builtin_popcount(mask));
    unsigned everywhere = (1u << k) - 1;
    for (unsigned mask = 1; mask < (1u << k); ++mask)
        if (is_clique[mask] && __builtin_popcount(mask) == best) everywhere &= mask;
    std::set<int> in_x(x_set.begin(), x_set.end());
    std::set<int> in_y(y_set.begin(), y_set.end());
    std::optional<std::pair<int, int>> pick;
    for (int i = 0; i < k; ++i) {
        if (!(everywhere >> i & 1) || !in_x.count(xy[i])) continue;
        for (int j = 0; j < k; ++j) {
            if (!(everywhere >> j & 1) || !in_y.count(xy[j])) continue;
            if (!g.has_edge(xy[i], xy[j])) continue;
            std::pair<int, int> cand{xy[i], xy[j]};
            if (!pick || cand < *pick) pick = cand;
        }
    }
    return pick;
}

namespace {

struct TheoremCounterexample {
    EngineCertificate cert;
};

void ensure_valid(const SimpleGraph& g, const ListAssignment& l, const Coloring& c) {
    for (int v = 0; v < g.size(); ++v)
        if (c[v] < 0) throw certificate_error("internal", "engine produced a partial colouring");
    if (!verify_coloring(g, l, c))
        throw certificate_error("internal", "engine produced an invalid colouring");
}

ElementaryPresentation peel_last(const ElementaryPresentation& p) {
    ElementaryPresentation sub;
    sub.b.left = p.b.left;
    sub.b.right = p.b.right;
    const int ex = p.flat_edges.back().x_edge;
    const int ey = p.flat_edges.back().y_edge;
    std::vector<int> remap(p.b.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(p.b.edges.size()); ++e)
        if (e != ex && e != ey) {
            remap[e] = static_cast<int>(sub.b.edges.size());
            sub.b.edges.push_back(p.b.edges[e]);
        }
    for (size_t i = 0; i + 1 < p.flat_edges.size(); ++i)
        sub.flat_edges.push_back({remap[p.flat_edges[i].x_edge], remap[p.flat_edges[i].y_edge]});
    sub.augments.assign(p.augments.begin(), p.augments.end() - 1);
    return sub;
}

std::vector<int> survivor_edge_ids(const ElementaryPresentation& p) {
    std::vector<char> used(p.b.edges.size(), 0);
    for (const auto& f : p.flat_edges) used[f.x_edge] = used[f.y_edge] = 1;
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(p.b.edges.size()); ++e)
        if (!used[e]) out.push_back(e);
    return out;
}

struct EngineImpl {
    EngineStats& stats;

    Coloring run(const ElementaryPresentation& p, const ListAssignment& l_in, int depth) {
        if (p.b.edges.empty() && p.augments.empty()) {
            if (!l_in.lists.empty()) throw input_error("list assignment for an empty graph");
            return {};
        }
        Realization r = realize(p);
        const int n = r.graph.size();
        if (static_cast<int>(l_in.lists.size()) != n)
            throw input_error("list_color_elementary: expected one list per realized vertex (" +
                              std::to_string(n) + ")");
        ListAssignment l;
        l.lists.resize(n);
        for (int v = 0; v < n; ++v) l.lists[v] = sorted_unique(l_in.lists[v]);
        const int omega = static_cast<int>(max_clique_desk(r.graph).size());
        for (int v = 0; v < n; ++v)
            if (static_cast<int>(l.lists[v].size()) < omega)
                throw input_error("list of vertex " + std::to_string(v) +
                                  " is smaller than the clique number " + std::to_string(omega));

        if (p.augments.empty()) {
            // line graph: colour the root edges; vertex v is root edge v
            auto edge_colors = list_edge_color(p.b, l.lists);
            Coloring c(edge_colors.begin(), edge_colors.end());
            ensure_valid(r.graph, l, c);
            return c;
        }

        const CobipartiteAugment& last = p.augments.back();
        if (last.y_size > last.x_size) return run_transposed(p, l, depth, r);

        const AugmentPlacement& place = r.locator.placements.back();
        const std::vector<int>& x_set = place.x_vertices;
        const std::vector<int>& y_set = place.y_vertices;
        const int k1 = static_cast<int>(x_set.size());
        const int k2 = static_cast<int>(y_set.size());
        const int prefix = n - k1 - k2;

        // the peeled presentation realizes exactly the first `prefix` vertices
        ElementaryPresentation sub = peel_last(p);
        ListAssignment l_sub;
        l_sub.lists.assign(l.lists.begin(), l.lists.begin() + prefix);
        Coloring c(n, -1);
        {
            Coloring c_sub = run(sub, l_sub, depth + 1);
            if (static_cast<int>(c_sub.size()) != prefix)
                throw certificate_error("internal", "peeled colouring has the wrong size");
            std::copy(c_sub.begin(), c_sub.end(), c.begin());
        }

        std::vector<int> xy = sorted_union(x_set, y_set);
        auto outside = [&](const std::vector<int>& block) {
            std::set<int> s;
            for (int v : block)
                for (int w : r.graph.neighbors(v)) s.insert(w);
            for (int v : xy) s.erase(v);
            return std::vector<int>(s.begin(), s.end());
        };
        const std::vector<int> n_x = outside(x_set);
        const std::vector<int> n_y = outside(y_set);
        require_clique(r.graph, sorted_union(x_set, n_x), "X with its outside neighbourhood", true);
        require_clique(r.graph, sorted_union(y_set, n_y), "Y with its outside neighbourhood", true);
        const auto [omega_xy, mu] = cobipartite_clique_number(x_set, y_set, r.graph);
        (void)omega_xy;

        std::vector<RetryRecord> log;
        const int budget = k1 * k2;
        int rounds = 0;
        std::optional<BlockingCertificate> last_blocking;
        while (true) {
            auto restricted = restrict_lists(l, c, x_set, y_set, n_x, n_y);
            auto filled = color_gadget(r.graph, x_set, y_set, restricted, omega, c);
            if (filled) {
                for (auto [v, col] : *filled) c[v] = col;
                ensure_valid(r.graph, l, c);
                return c;
            }
            BlockingCertificate bc =
                build_blocking(r.graph, x_set, y_set, restricted, l, c, n_x, n_y);
            last_blocking = bc;
            if (bc.x1 >= 0) {
                // a blocking clique meets X, so the matching bound sits below |Y|
                if (!(mu < k2))
                    throw certificate_error("internal",
                                            "blocking clique found but mu >= |Y| (" +
                                                std::to_string(mu) + " vs " + std::to_string(k2) + ")");
                RetryRecord rec{depth, bc.x1, bc.y1, bc.forbidden_x, bc.forbidden_y};
                const bool fresh =
                    std::none_of(log.begin(), log.end(), [&](const RetryRecord& old) {
                        return old.x1 == rec.x1 && old.y1 == rec.y1 &&
                               old.forbidden_x == rec.forbidden_x &&
                               old.forbidden_y == rec.forbidden_y;
                    });
                if (!fresh) ++stats.cycle_breaks;
                if (fresh && rounds < budget) {
                    log.push_back(rec);
                    stats.events.push_back(rec);
                    ++stats.recolor_rounds;
                    ++rounds;
                    GStarResult gs = build_gstar(p, k1, k2, mu);
                    auto [l_star, back_map] = star_lists(p, gs, l, bc.x1, bc.y1);
                    Coloring c_star = run(gs.presentation, l_star, depth + 1);
                    Coloring c_next(n, -1);
                    for (size_t w = 0; w < back_map.size(); ++w)
                        if (back_map[w] >= 0) c_next[back_map[w]] = c_star[w];
                    c = std::move(c_next);
                    continue;
                }
            }
            ++stats.fallback_invocations;
            auto joint = joint_recolor(r.graph, xy, n_x, n_y, l, c);
            if (joint) {
                c = *joint;
                ensure_valid(r.graph, l, c);
                return c;
            }
            EngineCertificate cert;
            cert.kind = "theorem-counterexample";
            cert.message = "gadget resisted " + std::to_string(rounds) +
                           " recolouring rounds and the joint exhaustive search";
            cert.blocking = last_blocking;
            throw TheoremCounterexample{std::move(cert)};
        }
    }

    Coloring run_transposed(const ElementaryPresentation& p, const ListAssignment& l, int depth,
                            const Realization& r) {
        ElementaryPresentation t = p;
        std::swap(t.flat_edges.back().x_edge, t.flat_edges.back().y_edge);
        CobipartiteAugment& ta = t.augments.back();
        std::swap(ta.x_size, ta.y_size);
        for (auto& ce : ta.cross_edges) std::swap(ce.first, ce.second);
        std::sort(ta.cross_edges.begin(), ta.cross_edges.end());
        const int n = r.graph.size();
        const int xs = p.augments.back().x_size;
        const int ys = p.augments.back().y_size;
        const int start = n - xs - ys;
        auto to_p = [&](int v) {
            if (v < start) return v;
            if (v < start + ys) return start + xs + (v - start); // transposed X block = old Y
            return start + (v - start - ys);                     // transposed Y block = old X
        };
        ListAssignment lt;
        lt.lists.resize(n);
        for (int v = 0; v < n; ++v) lt.lists[v] = l.lists[to_p(v)];
        Coloring ct = run(t, lt, depth);
        Coloring c(n, -1);
        for (int v = 0; v < n; ++v) c[to_p(v)] = ct[v];
        return c;
    }

    std::optional<std::map<int, int>> color_gadget(const SimpleGraph& g,
                                                   const std::vector<int>& x_set,
                                                   const std::vector<int>& y_set,
                                                   const std::map<int, std::vector<int>>& restricted,
                                                   int omega, const Coloring& c) {
        const int total = static_cast<int>(x_set.size() + y_set.size());
        if (total <= omega || static_cast<int>(x_set.size()) < omega)
            return backtrack_subset(g, sorted_union(x_set, y_set), restricted, c);
        // |X| equals the clique number: the outside neighbourhood of X is empty
        // and a covering matching of cross non-edges must exist
        try {
            auto tight = tighten_to_matching(x_set, y_set, g);
            if (!tight)
                throw certificate_error("internal",
                                        "tightening failed with |X| at the clique number");
            return color_matching_cobipartite(tight->graph, x_set, y_set, restricted);
        } catch (const input_error& e) {
            throw certificate_error("internal",
                                    std::string("matching-case precondition failed: ") + e.what());
        }
    }

    BlockingCertificate build_blocking(const SimpleGraph& g, const std::vector<int>& x_set,
                                       const std::vector<int>& y_set,
                                       const std::map<int, std::vector<int>>& restricted,
                                       const ListAssignment& l, const Coloring& c,
                                       const std::vector<int>& n_x, const std::vector<int>& n_y) {
        BlockingCertificate bc;
        std::vector<int> xy = sorted_union(x_set, y_set);
        const int k = static_cast<int>(xy.size());
        std::vector<char> is_clique = clique_masks(g, xy);
        auto merged_size = [&](unsigned mask) {
            std::set<int> colours;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) {
                    const auto& list = restricted.at(xy[i]);
                    colours.insert(list.begin(), list.end());
                }
            return static_cast<int>(colours.size());
        };
        unsigned found = 0;
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            if (!is_clique[mask]) continue;
            if (merged_size(mask) < __builtin_popcount(mask)) {
                found = mask;
                break;
            }
        }
        if (found) {
            // grow while the clique keeps violating its merged list bound
            for (int i = 0; i < k; ++i) {
                if (found >> i & 1) continue;
                unsigned next = found | (1u << i);
                if (is_clique[next] && merged_size(next) < __builtin_popcount(next)) found = next;
            }
            for (int i = 0; i < k; ++i)
                if (found >> i & 1) bc.clique.push_back(xy[i]);
            bc.merged_list_size = merged_size(found);
            auto pair = choose_blocking_pair(x_set, y_set, g, restricted);
            if (pair) {
                bc.x1 = pair->first;
                bc.y1 = pair->second;
                std::vector<int> lx = sorted_unique(l.lists[bc.x1]);
                std::vector<int> ly = sorted_unique(l.lists[bc.y1]);
                std::vector<int> both;
                std::set_intersection(lx.begin(), lx.end(), ly.begin(), ly.end(),
                                      std::back_inserter(both));
                bc.overlap = static_cast<int>(both.size());
                bc.x_free = static_cast<int>(restricted.at(bc.x1).size());
                bc.y_free = static_cast<int>(restricted.at(bc.y1).size());
                std::set<int> used_x, used_y;
                for (int v : n_x) used_x.insert(c[v]);
                for (int v : n_y) used_y.insert(c[v]);
                for (int col : lx)
                    if (used_x.count(col)) bc.forbidden_x.push_back(col);
                for (int col : ly)
                    if (used_y.count(col)) bc.forbidden_y.push_back(col);
            }
        }
        return bc;
    }

    // lists for the rebuilt presentation plus the vertex pull-back map
    // (realized G* vertex -> realized G vertex, -1 on the fresh clique)
    std::pair<ListAssignment, std::vector<int>> star_lists(const ElementaryPresentation& p,
                                                           const GStarResult& gs,
                                                           const ListAssignment& l, int x1,
                                                           int y1) {
        std::vector<int> sp = survivor_edge_ids(p);
        std::vector<int> sg = survivor_edge_ids(gs.presentation);
        std::map<int, int> p_rank;
        for (size_t i = 0; i < sp.size(); ++i) p_rank[sp[i]] = static_cast<int>(i);
        std::set<int> star_x(gs.xstar_edges.begin(), gs.xstar_edges.end());
        std::set<int> star_y(gs.ystar_edges.begin(), gs.ystar_edges.end());
        int total = static_cast<int>(sg.size());
        for (const auto& a : gs.presentation.augments) total += a.x_size + a.y_size;
        ListAssignment ls;
        ls.lists.resize(total);
        std::vector<int> back(total, -1);
        for (size_t i = 0; i < sg.size(); ++i) {
            int e = sg[i];
            if (star_x.count(e)) {
                ls.lists[i] = l.lists[x1];
            } else if (star_y.count(e)) {
                ls.lists[i] = l.lists[y1];
            } else {
                int pv = p_rank.at(e);
                back[i] = pv;
                ls.lists[i] = l.lists[pv];
            }
        }
        int off_g = static_cast<int>(sg.size());
        int off_p = static_cast<int>(sp.size());
        for (const auto& a : gs.presentation.augments) {
            const int block = a.x_size + a.y_size;
            for (int t = 0; t < block; ++t) {
                back[off_g + t] = off_p + t;
                ls.lists[off_g + t] = l.lists[off_p + t];
            }
            off_g += block;
            off_p += block;
        }
        return {std::move(ls), std::move(back)};
    }

    std::optional<Coloring> joint_recolor(const SimpleGraph& g, const std::vector<int>& xy,
                                          const std::vector<int>& n_x, const std::vector<int>& n_y,
                                          const ListAssignment& l, const Coloring& c) {
        std::vector<int> region = sorted_union(xy, sorted_union(n_x, n_y));
        Coloring fixed = c;
        for (int v : region) fixed[v] = -1;
        std::map<int, std::vector<int>> lists;
        for (int v : region) lists[v] = l.lists[v];
        auto filled = backtrack_subset(g, region, lists, fixed);
        if (!filled) return std::nullopt;
        Coloring out = fixed;
        for (auto [v, col] : *filled) out[v] = col;
        return out;
    }
};

} // namespace

EngineResult list_color_elementary(const ElementaryPresentation& p, const ListAssignment& l) {
    EngineResult res;
    EngineImpl impl{res.stats};
    try {
        res.coloring = impl.run(p, l, 0);
    } catch (const TheoremCounterexample& t) {
        res.certificate = t.cert;
    } catch (const certificate_error& e) {
        res.certificate = EngineCertificate{e.kind, e.what(), std::nullopt};
    }
    return res;
}

} // namespace elementum
