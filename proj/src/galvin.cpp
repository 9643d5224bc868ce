#include "elementum/galvin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace elementum {

ProperEdgeColoring koenig_edge_coloring(const BipartiteMultigraph& b) {
    b.validate();
    const int m = static_cast<int>(b.edges.size());
    if (m == 0) throw input_error("koenig_edge_coloring: multigraph has no edges");
    const int delta = b.max_degree();
    // at_*[v][c] is the edge currently coloured c at v, or -1
    std::vector<std::vector<int>> at_left(b.left, std::vector<int>(delta + 1, -1));
    std::vector<std::vector<int>> at_right(b.right, std::vector<int>(delta + 1, -1));
    std::vector<int> color(m, 0);
    for (int e = 0; e < m; ++e) {
        auto [l, r] = b.edges[e];
        int chosen = 0;
        for (int c = 1; c <= delta; ++c)
            if (at_left[l][c] < 0 && at_right[r][c] < 0) {
                chosen = c;
                break;
            }
        if (chosen == 0) {
            int alpha = 0, beta = 0;
            for (int c = 1; c <= delta && !alpha; ++c)
                if (at_left[l][c] < 0) alpha = c;
            for (int c = 1; c <= delta && !beta; ++c)
                if (at_right[r][c] < 0) beta = c;
            // walk the alpha/beta alternating path starting at r with its
            // alpha edge; parity keeps the walk away from l, so swapping the
            // two colours along it frees alpha at both endpoints
            std::vector<int> path;
            int v = r;
            bool v_right = true;
            int want = alpha;
            while (true) {
                int e2 = v_right ? at_right[v][want] : at_left[v][want];
                if (e2 < 0) break;
                path.push_back(e2);
                v = v_right ? b.edges[e2].first : b.edges[e2].second;
                v_right = !v_right;
                want = (want == alpha) ? beta : alpha;
            }
            for (int e2 : path) {
                auto [l2, r2] = b.edges[e2];
                at_left[l2][color[e2]] = -1;
                at_right[r2][color[e2]] = -1;
            }
            for (int e2 : path) {
                auto [l2, r2] = b.edges[e2];
                color[e2] = (color[e2] == alpha) ? beta : alpha;
                at_left[l2][color[e2]] = e2;
                at_right[r2][color[e2]] = e2;
            }
            chosen = alpha;
        }
        color[e] = chosen;
        at_left[l][chosen] = e;
        at_right[r][chosen] = e;
    }
    return {delta, std::move(color)};
}

bool KernelOrientation::adjacent(int e, int f) const {
    if (e == f) return false;
    return b.edges[e].first == b.edges[f].first || b.edges[e].second == b.edges[f].second;
}

bool KernelOrientation::arc(int e, int f) const {
    if (e == f) return false;
    if (b.edges[e].first == b.edges[f].first && color[f] < color[e]) return true;
    if (b.edges[e].second == b.edges[f].second && color[f] > color[e]) return true;
    return false;
}

int KernelOrientation::out_degree(int e) const {
    int d = 0;
    for (int f = 0; f < static_cast<int>(b.edges.size()); ++f)
        if (arc(e, f)) ++d;
    return d;
}

KernelOrientation kernel_orientation(const BipartiteMultigraph& b, const ProperEdgeColoring& c) {
    b.validate();
    if (c.color.size() != b.edges.size())
        throw input_error("kernel_orientation: colouring size mismatch");
    return {b, c.color};
}

std::vector<int> find_kernel(const KernelOrientation& o, const std::vector<int>& s) {
    const int m = static_cast<int>(o.b.edges.size());
    if (s.empty()) throw input_error("find_kernel: empty vertex subset");
    std::vector<char> in_s(m, 0);
    for (int e : s) {
        if (e < 0 || e >= m) throw input_error("find_kernel: vertex out of range");
        if (in_s[e]) throw input_error("find_kernel: repeated vertex");
        in_s[e] = 1;
    }
    // deferred acceptance on the edges of s: left vertices propose their
    // incident edges by ascending colour, right vertices keep the highest
    std::vector<std::vector<int>> proposals(o.b.left);
    for (int e = 0; e < m; ++e)
        if (in_s[e]) proposals[o.b.edges[e].first].push_back(e);
    for (auto& list : proposals)
        std::sort(list.begin(), list.end(),
                  [&](int a, int bb) { return o.color[a] < o.color[bb]; });
    std::vector<size_t> next(o.b.left, 0);
    std::vector<int> held_at_right(o.b.right, -1);
    std::vector<int> held_of_left(o.b.left, -1);
    std::deque<int> queue;
    for (int l = 0; l < o.b.left; ++l)
        if (!proposals[l].empty()) queue.push_back(l);
    while (!queue.empty()) {
        int l = queue.front();
        queue.pop_front();
        while (held_of_left[l] < 0 && next[l] < proposals[l].size()) {
            int e = proposals[l][next[l]++];
            int r = o.b.edges[e].second;
            int f = held_at_right[r];
            if (f < 0) {
                held_at_right[r] = e;
                held_of_left[l] = e;
            } else if (o.color[e] > o.color[f]) {
                held_at_right[r] = e;
                held_of_left[l] = e;
                int l2 = o.b.edges[f].first;
                held_of_left[l2] = -1;
                queue.push_back(l2);
            }
        }
    }
    std::vector<int> kernel;
    for (int r = 0; r < o.b.right; ++r)
        if (held_at_right[r] >= 0) kernel.push_back(held_at_right[r]);
    std::sort(kernel.begin(), kernel.end());

    // certify both kernel properties before handing the set out
    for (size_t i = 0; i < kernel.size(); ++i)
        for (size_t j = i + 1; j < kernel.size(); ++j)
            if (o.adjacent(kernel[i], kernel[j]))
                throw certificate_error("internal", "find_kernel: result not independent");
    std::vector<char> in_k(m, 0);
    for (int e : kernel) in_k[e] = 1;
    for (int e : s) {
        if (in_k[e]) continue;
        bool absorbed = false;
        for (int f : kernel)
            if (o.arc(e, f)) {
                absorbed = true;
                break;
            }
        if (!absorbed)
            throw certificate_error("internal",
                                    "find_kernel: edge " + std::to_string(e) + " not absorbed");
    }
    return kernel;
}

std::vector<int> list_edge_color(const BipartiteMultigraph& b,
                                 const std::vector<std::vector<int>>& lists) {
    b.validate();
    const int m = static_cast<int>(b.edges.size());
    if (m == 0) throw input_error("list_edge_color: multigraph has no edges");
    if (static_cast<int>(lists.size()) != m)
        throw input_error("list_edge_color: one list per edge required");
    const int delta = b.max_degree();
    std::set<int> palette;
    for (int e = 0; e < m; ++e) {
        std::set<int> distinct(lists[e].begin(), lists[e].end());
        if (static_cast<int>(distinct.size()) < delta)
            throw input_error("list_edge_color: list of edge " + std::to_string(e) +
                              " has fewer than " + std::to_string(delta) + " colours");
        palette.insert(distinct.begin(), distinct.end());
    }
    KernelOrientation o = kernel_orientation(b, koenig_edge_coloring(b));
    std::vector<int> chosen(m, -1);
    int remaining = m;
    for (int c : palette) {
        if (remaining == 0) break;
        std::vector<int> s;
        for (int e = 0; e < m; ++e)
            if (chosen[e] < 0 &&
                std::find(lists[e].begin(), lists[e].end(), c) != lists[e].end())
                s.push_back(e);
        if (s.empty()) continue;
        for (int e : find_kernel(o, s)) {
            chosen[e] = c;
            --remaining;
        }
    }
    if (remaining != 0)
        throw certificate_error("internal",
                                "list_edge_color: colours exhausted with edges uncoloured");
    return chosen;
}

} // namespace elementum
