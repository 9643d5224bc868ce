#include "elementum/graph_core.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace elementum {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw input_error("SimpleGraph: negative vertex count");
    adj_.assign(n, std::vector<char>(n, 0));
    nbr_.assign(n, {});
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("SimpleGraph: vertex " + std::to_string(v) + " out of range");
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u][v] != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("SimpleGraph: self loops are not allowed");
    if (adj_[u][v]) return;
    adj_[u][v] = adj_[v][u] = 1;
    nbr_[u].insert(std::lower_bound(nbr_[u].begin(), nbr_[u].end(), v), v);
    nbr_[v].insert(std::lower_bound(nbr_[v].begin(), nbr_[v].end(), u), u);
    ++m_;
}

const std::vector<int>& SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return nbr_[v];
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(nbr_[v].size());
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbr_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void BipartiteMultigraph::validate() const {
    if (left < 0 || right < 0) throw input_error("BipartiteMultigraph: negative part size");
    for (auto [l, r] : edges)
        if (l < 0 || l >= left || r < 0 || r >= right)
            throw input_error("BipartiteMultigraph: edge endpoint out of range");
}

int BipartiteMultigraph::degree_left(int l) const {
    int d = 0;
    for (auto [a, b] : edges) {
        (void)b;
        if (a == l) ++d;
    }
    return d;
}

int BipartiteMultigraph::degree_right(int r) const {
    int d = 0;
    for (auto [a, b] : edges) {
        (void)a;
        if (b == r) ++d;
    }
    return d;
}

int BipartiteMultigraph::max_degree() const {
    std::vector<int> dl(left, 0), dr(right, 0);
    for (auto [l, r] : edges) {
        ++dl[l];
        ++dr[r];
    }
    int d = 0;
    for (int x : dl) d = std::max(d, x);
    for (int x : dr) d = std::max(d, x);
    return d;
}

LineGraphResult line_graph(const BipartiteMultigraph& b) {
    b.validate();
    const int m = static_cast<int>(b.edges.size());
    if (m == 0) throw input_error("line_graph: multigraph has no edges");
    SimpleGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (b.edges[i].first == b.edges[j].first || b.edges[i].second == b.edges[j].second)
                g.add_edge(i, j);
    EdgeIndexMap map;
    map.vertex_to_edge.resize(m);
    map.edge_to_vertex.resize(m);
    for (int i = 0; i < m; ++i) map.vertex_to_edge[i] = map.edge_to_vertex[i] = i;
    return {std::move(g), std::move(map)};
}

BipartitionResult is_bipartite(const SimpleGraph& g) {
    const int n = g.size();
    BipartitionResult res;
    res.side.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);
    for (int start = 0; start < n; ++start) {
        if (res.side[start] != -1) continue;
        res.side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (res.side[v] == -1) {
                    res.side[v] = static_cast<char>(1 - res.side[u]);
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (res.side[v] == res.side[u]) {
                    // walk both endpoints up to their lowest common ancestor;
                    // equal BFS parity makes the closed walk an odd simple cycle
                    int a = u, bb = v;
                    std::vector<int> pa{a}, pb{bb};
                    while (depth[a] > depth[bb]) pa.push_back(a = parent[a]);
                    while (depth[bb] > depth[a]) pb.push_back(bb = parent[bb]);
                    while (a != bb) {
                        pa.push_back(a = parent[a]);
                        pb.push_back(bb = parent[bb]);
                    }
                    res.odd_cycle.assign(pa.begin(), pa.end());
                    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

namespace {

bool kuhn_augment(const SimpleGraph& g, int u, const std::vector<char>& in_a,
                  std::vector<char>& visited, std::vector<int>& match) {
    for (int v : g.neighbors(u)) {
        if (in_a[v] || visited[v]) continue;
        visited[v] = 1;
        if (match[v] < 0 || kuhn_augment(g, match[v], in_a, visited, match)) {
            match[v] = u;
            match[u] = v;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<std::pair<int, int>> max_matching_bipartite(const SimpleGraph& g,
                                                        const std::vector<int>& part_a,
                                                        const std::vector<int>& part_b) {
    const int n = g.size();
    std::vector<char> seen(n, 0), in_a(n, 0);
    for (int v : part_a) {
        if (v < 0 || v >= n || seen[v]) throw input_error("max_matching_bipartite: bad part_a");
        seen[v] = 1;
        in_a[v] = 1;
    }
    for (int v : part_b) {
        if (v < 0 || v >= n || seen[v]) throw input_error("max_matching_bipartite: bad part_b");
        seen[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw input_error("max_matching_bipartite: parts do not cover the graph");
    for (auto [u, v] : g.edges())
        if (in_a[u] == in_a[v])
            throw input_error("max_matching_bipartite: parts are not a bipartition");

    std::vector<int> match(n, -1);
    std::vector<int> order(part_a);
    std::sort(order.begin(), order.end());
    for (int u : order) {
        std::vector<char> visited(n, 0);
        kuhn_augment(g, u, in_a, visited, match);
    }
    std::vector<std::pair<int, int>> out;
    for (int u : order)
        if (match[u] >= 0) out.emplace_back(u, match[u]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct CliqueSearch {
    const SimpleGraph& g;
    std::vector<int> best;
    std::vector<int> cur;

    explicit CliqueSearch(const SimpleGraph& graph) : g(graph) {}

    // greedy colouring of cand as an upper bound; cand comes back ordered by
    // colour class so the branch loop can prune from the high end
    void expand(std::vector<int>& cand) {
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<int> colour(cand.size());
        std::vector<std::vector<int>> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool ok = true;
                for (int w : classes[k])
                    if (g.has_edge(v, w)) {
                        ok = false;
                        break;
                    }
                if (ok) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        std::vector<int> ordered;
        std::vector<int> bound;
        for (size_t k = 0; k < classes.size(); ++k)
            for (int v : classes[k]) {
                ordered.push_back(v);
                bound.push_back(static_cast<int>(k) + 1);
            }
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (cur.size() + bound[i] <= best.size()) return;
            int v = ordered[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.has_edge(ordered[j], v)) next.push_back(ordered[j]);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

std::vector<int> max_clique_desk(const SimpleGraph& g) {
    CliqueSearch search(g);
    std::vector<int> cand(g.size());
    for (int i = 0; i < g.size(); ++i) cand[i] = i;
    search.expand(cand);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& s) {
    std::vector<char> seen(g.size(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.size()) throw input_error("induced_subgraph: vertex out of range");
        if (seen[v]) throw input_error("induced_subgraph: repeated vertex");
        seen[v] = 1;
    }
    SimpleGraph sub(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), s};
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

} // namespace elementum
