#include "elementum/generators.hpp"

#include <algorithm>
#include <set>

#include "elementum/errors.hpp"
#include "elementum/rng.hpp"

namespace elementum {

BipartiteMultigraph random_bipartite_multigraph(int left, int right, int m, int max_multiplicity,
                                                std::uint64_t seed) {
    if (left < 1 || right < 1 || m < 1 || max_multiplicity < 1)
        throw input_error("random_bipartite_multigraph: parameters must be positive");
    if (static_cast<long long>(left) * right * max_multiplicity < m)
        throw input_error("random_bipartite_multigraph: multiplicity cap makes " +
                          std::to_string(m) + " edges infeasible");
    Rng rng(seed);
    std::vector<std::vector<int>> count(left, std::vector<int>(right, 0));
    BipartiteMultigraph b;
    b.left = left;
    b.right = right;
    while (static_cast<int>(b.edges.size()) < m) {
        int l = rng.below(left);
        int r = rng.below(right);
        if (count[l][r] >= max_multiplicity) continue;
        ++count[l][r];
        b.edges.emplace_back(l, r);
    }
    b.validate();
    return b;
}

namespace {

CobipartiteAugment random_augment(Rng& rng, AugmentShape shape) {
    CobipartiteAugment a;
    if (shape == AugmentShape::matching) {
        a.x_size = 2 + rng.below(2);
        a.y_size = 1 + rng.below(a.x_size);
        // cross non-edges form a matching covering Y: drop one distinct x per y
        std::vector<int> xs(a.x_size);
        for (int i = 0; i < a.x_size; ++i) xs[i] = i;
        for (int i = 0; i < a.y_size; ++i) {
            int j = i + rng.below(a.x_size - i);
            std::swap(xs[i], xs[j]);
        }
        std::set<std::pair<int, int>> dropped;
        for (int j = 0; j < a.y_size; ++j) dropped.insert({xs[j], j});
        for (int i = 0; i < a.x_size; ++i)
            for (int j = 0; j < a.y_size; ++j)
                if (!dropped.count({i, j})) a.cross_edges.emplace_back(i, j);
    } else {
        do {
            a.x_size = 1 + rng.below(3);
            a.y_size = 1 + rng.below(3);
        } while (a.x_size == 1 && a.y_size == 1); // needs both a cross edge and a non-edge
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < a.x_size; ++i)
            for (int j = 0; j < a.y_size; ++j)
                if (rng.below(2)) a.cross_edges.emplace_back(i, j);
                else all.emplace_back(i, j); // missing pairs, for the repairs below
        if (a.cross_edges.empty()) {
            int pick = rng.below(static_cast<int>(all.size()));
            a.cross_edges.push_back(all[pick]);
        } else if (all.empty()) {
            int pick = rng.below(static_cast<int>(a.cross_edges.size()));
            a.cross_edges.erase(a.cross_edges.begin() + pick);
        }
    }
    std::sort(a.cross_edges.begin(), a.cross_edges.end());
    a.validate();
    return a;
}

} // namespace

ElementaryPresentation random_presentation(const BipartiteMultigraph& b, int h,
                                           std::uint64_t seed, AugmentShape shape) {
    b.validate();
    if (h < 0) throw input_error("random_presentation: negative augment count");
    LineGraphResult lg = line_graph(b);
    std::vector<FlatEdgeSpec> chosen;
    std::vector<char> taken(lg.graph.size(), 0);
    for (auto [u, v] : lg.graph.edges()) {
        if (static_cast<int>(chosen.size()) == h) break;
        if (taken[u] || taken[v]) continue;
        if (!is_flat_edge(lg.graph, {u, v})) continue;
        chosen.push_back({u, v});
        taken[u] = taken[v] = 1;
    }
    if (static_cast<int>(chosen.size()) < h)
        throw input_error("random_presentation: found only " + std::to_string(chosen.size()) +
                          " disjoint flat edges of the " + std::to_string(h) + " requested");
    ElementaryPresentation p;
    p.b = b;
    p.flat_edges = chosen;
    Rng rng(seed);
    for (int i = 0; i < h; ++i) p.augments.push_back(random_augment(rng, shape));
    p.validate();
    return p;
}

PeculiarGraph peculiar_graph(const PeculiarSpec& spec) {
    for (int i = 0; i < 3; ++i) {
        if (spec.a_sizes[i] < 1 || spec.b_sizes[i] < 1 || spec.q_sizes[i] < 1)
            throw input_error("peculiar_graph: every part must be nonempty");
        if (spec.removed[i].empty())
            throw input_error("peculiar_graph: at least one removed pair per side required");
        std::set<std::pair<int, int>> seen;
        for (auto [ai, bj] : spec.removed[i]) {
            if (ai < 0 || ai >= spec.a_sizes[i] || bj < 0 || bj >= spec.b_sizes[(i + 1) % 3])
                throw input_error("peculiar_graph: removed pair out of range");
            if (!seen.insert({ai, bj}).second)
                throw input_error("peculiar_graph: repeated removed pair");
        }
    }
    PeculiarGraph out;
    int n = 0;
    auto block = [&n](int size) {
        std::vector<int> ids(size);
        for (int i = 0; i < size; ++i) ids[i] = n++;
        return ids;
    };
    for (int i = 0; i < 3; ++i) {
        out.a_parts[i] = block(spec.a_sizes[i]);
        out.b_parts[i] = block(spec.b_sizes[i]);
    }
    for (int i = 0; i < 3; ++i) out.q_parts[i] = block(spec.q_sizes[i]);
    const int core = n - spec.q_sizes[0] - spec.q_sizes[1] - spec.q_sizes[2];
    SimpleGraph g(n);
    std::set<std::pair<int, int>> holes;
    for (int i = 0; i < 3; ++i)
        for (auto [ai, bj] : spec.removed[i])
            holes.insert({out.a_parts[i][ai], out.b_parts[(i + 1) % 3][bj]});
    for (int u = 0; u < core; ++u)
        for (int v = u + 1; v < core; ++v)
            if (!holes.count({u, v}) && !holes.count({v, u})) g.add_edge(u, v);
    for (int i = 0; i < 3; ++i) {
        const auto& q = out.q_parts[i];
        for (size_t s = 0; s < q.size(); ++s)
            for (size_t t = s + 1; t < q.size(); ++t) g.add_edge(q[s], q[t]);
        std::set<int> skip(out.a_parts[i].begin(), out.a_parts[i].end());
        skip.insert(out.b_parts[i].begin(), out.b_parts[i].end());
        for (int v : q)
            for (int u = 0; u < core; ++u)
                if (!skip.count(u)) g.add_edge(v, u);
    }
    out.graph = std::move(g);
    return out;
}

SimpleGraph named_graph(const std::string& name) {
    if (name == "claw") {
        SimpleGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        return g;
    }
    if (name == "c5" || name == "c7") {
        const int n = name == "c5" ? 5 : 7;
        SimpleGraph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    if (name == "c7_complement") return complement(named_graph("c7"));
    if (name == "p3") {
        SimpleGraph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        return g;
    }
    if (name.size() > 1 && name[0] == 'k') {
        const std::string digits = name.substr(1);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const int n = std::stoi(digits);
            if (n >= 1 && n <= 64) {
                SimpleGraph g(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
                return g;
            }
        }
    }
    throw input_error("named_graph: unknown name '" + name + "'");
}

} // namespace elementum
