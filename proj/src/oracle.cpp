#include "elementum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "elementum/errors.hpp"
#include "elementum/rng.hpp"

namespace elementum {

namespace {

bool k_colorable(const SimpleGraph& g, int k) {
    const int n = g.size();
    std::vector<int> colour(n, -1);
    // vertex i never uses a colour above i: breaks colour-permutation symmetry
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int pos = 0;
    std::vector<int> tried(n, -1);
    while (pos >= 0) {
        if (pos == n) return true;
        const int v = order[pos];
        const int cap = std::min(k - 1, pos);
        int next = -1;
        for (int c = tried[pos] + 1; c <= cap; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (colour[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                next = c;
                break;
            }
        }
        if (next < 0) {
            tried[pos] = -1;
            colour[v] = -1;
            --pos;
        } else {
            tried[pos] = next;
            colour[v] = next;
            ++pos;
        }
    }
    return false;
}

std::vector<int> next_combination(std::vector<int> comb, int universe) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < universe - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return comb;
        }
    }
    return {}; // wrapped
}

long long combinations(int universe, int k) {
    long long out = 1;
    for (int i = 0; i < k; ++i) out = out * (universe - i) / (i + 1);
    return out;
}

ListAssignment sample_assignment(const SimpleGraph& g, int k, int universe, std::uint64_t seed,
                                 long long trial) {
    Rng rng(seed + static_cast<std::uint64_t>(trial));
    ListAssignment l;
    l.lists.resize(g.size());
    std::vector<int> pool(universe);
    for (int v = 0; v < g.size(); ++v) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < k; ++i) {
            int j = i + rng.below(universe - i);
            std::swap(pool[i], pool[j]);
        }
        l.lists[v].assign(pool.begin(), pool.begin() + k);
        std::sort(l.lists[v].begin(), l.lists[v].end());
    }
    return l;
}

} // namespace

int chromatic_number_exact(const SimpleGraph& g, int max_n) {
    if (g.size() > max_n)
        throw input_error("chromatic_number_exact: graph exceeds the size guard of " +
                          std::to_string(max_n));
    if (g.size() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colorable(g, k)) return k;
}

std::optional<Coloring> is_list_colorable_exact(const SimpleGraph& g, const ListAssignment& l,
                                                int max_n) {
    const int n = g.size();
    if (n > max_n)
        throw input_error("is_list_colorable_exact: graph exceeds the size guard of " +
                          std::to_string(max_n));
    if (static_cast<int>(l.lists.size()) != n)
        throw input_error("is_list_colorable_exact: expected one list per vertex");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return l.lists[a].size() < l.lists[b].size(); });
    Coloring colour(n, -1);
    std::vector<int> choice(n, -1);
    int pos = 0;
    while (pos >= 0) {
        if (pos == n) return colour;
        const int v = order[pos];
        int found = -1;
        for (int c = choice[pos] + 1; c < static_cast<int>(l.lists[v].size()); ++c) {
            const int col = l.lists[v][c];
            bool ok = true;
            for (int w : g.neighbors(v))
                if (colour[w] == col) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = c;
                break;
            }
        }
        if (found < 0) {
            choice[pos] = -1;
            colour[v] = -1;
            --pos;
        } else {
            choice[pos] = found;
            colour[v] = l.lists[v][found];
            ++pos;
        }
    }
    return std::nullopt;
}

ChoosabilityVerdict choosability_check(const SimpleGraph& g, int k, int universe_size,
                                       ChoosabilityMode mode, long long trials,
                                       std::uint64_t seed, int jobs, long long exhaustive_budget) {
    if (k < 1) throw input_error("choosability_check: k must be positive");
    if (universe_size < k) throw input_error("choosability_check: universe smaller than k");
    ChoosabilityVerdict verdict;
    verdict.mode = mode;
    verdict.k = k;
    verdict.universe_size = universe_size;
    verdict.seed = seed;
    const int n = g.size();

    if (mode == ChoosabilityMode::exhaustive) {
        const long long per_vertex = combinations(universe_size, k);
        long long total = 1;
        for (int v = 0; v < n; ++v) {
            if (total > exhaustive_budget / per_vertex)
                throw input_error("choosability_check: exhaustive enumeration exceeds the budget");
            total *= per_vertex;
        }
        std::vector<std::vector<int>> subsets(n);
        std::vector<int> first(k);
        std::iota(first.begin(), first.end(), 0);
        for (int v = 0; v < n; ++v) subsets[v] = first;
        for (;;) {
            ++verdict.trials;
            ListAssignment l;
            l.lists = subsets;
            if (!is_list_colorable_exact(g, l)) {
                verdict.holds = false;
                verdict.counterexample = l;
                return verdict;
            }
            int v = n - 1;
            while (v >= 0) {
                subsets[v] = next_combination(subsets[v], universe_size);
                if (!subsets[v].empty()) break;
                subsets[v] = first;
                --v;
            }
            if (v < 0) break;
        }
        return verdict;
    }

    if (trials < 1) throw input_error("choosability_check: sampled mode needs trials >= 1");
    if (jobs < 1) throw input_error("choosability_check: jobs must be positive");
    std::atomic<long long> first_fail(trials);
    auto worker = [&](int stripe) {
        for (long long t = stripe; t < trials; t += jobs) {
            if (t >= first_fail.load()) break; // later trials cannot improve the verdict
            ListAssignment l = sample_assignment(g, k, universe_size, seed, t);
            if (!is_list_colorable_exact(g, l)) {
                long long seen = first_fail.load();
                while (t < seen && !first_fail.compare_exchange_weak(seen, t)) {
                }
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& th : pool) th.join();
    }
    const long long fail = first_fail.load();
    if (fail < trials) {
        verdict.holds = false;
        verdict.trials = fail + 1;
        verdict.counterexample = sample_assignment(g, k, universe_size, seed, fail);
        if (is_list_colorable_exact(g, *verdict.counterexample))
            throw certificate_error("internal", "sampled counterexample failed certification");
    } else {
        verdict.trials = trials;
    }
    return verdict;
}

std::optional<EdgeBicoloring> elementary_bruteforce(const SimpleGraph& g, int max_edges) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > max_edges)
        throw input_error("elementary_bruteforce: graph exceeds the size guard of " +
                          std::to_string(max_edges) + " edges");
    std::map<std::pair<int, int>, int> index;
    for (int e = 0; e < m; ++e) index[edges[e]] = e;
    auto edge_id = [&](int a, int b) { return index.at({std::min(a, b), std::max(a, b)}); };
    // one constraint per induced P3: its two edges must get different tags
    std::vector<std::pair<int, int>> constraints;
    for (int v = 0; v < g.size(); ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j]))
                    constraints.emplace_back(edge_id(v, nb[i]), edge_id(v, nb[j]));
    }
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        for (auto [e, f] : constraints)
            if (((mask >> e) & 1u) == ((mask >> f) & 1u)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        EdgeBicoloring b;
        b.edges = edges;
        b.tag.resize(m);
        for (int e = 0; e < m; ++e) b.tag[e] = (mask >> e & 1u) ? EdgeTag::green : EdgeTag::pink;
        if (!verify_bicoloring(g, b))
            throw certificate_error("internal", "bruteforce tagging failed certification");
        return b;
    }
    return std::nullopt;
}

namespace {

struct ViolationSearch {
    const SimpleGraph& g;
    const ListAssignment& l;
    std::optional<CliqueListViolation> found;
    std::vector<int> clique;

    void dfs(const std::vector<int>& cands, const std::set<int>& colors) {
        if (found) return;
        if (!clique.empty() && colors.size() < clique.size()) {
            found = CliqueListViolation{clique, static_cast<int>(colors.size())};
            return;
        }
        for (size_t i = 0; i < cands.size(); ++i) {
            const int v = cands[i];
            std::vector<int> next;
            for (size_t j = i + 1; j < cands.size(); ++j)
                if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
            std::set<int> cols = colors;
            cols.insert(l.lists[v].begin(), l.lists[v].end());
            clique.push_back(v);
            dfs(next, cols);
            clique.pop_back();
            if (found) return;
        }
    }
};

} // namespace

std::optional<CliqueListViolation> find_list_violation(const SimpleGraph& g,
                                                       const ListAssignment& l, int max_n) {
    if (g.size() > max_n)
        throw input_error("find_list_violation: graph exceeds the size guard of " +
                          std::to_string(max_n));
    if (static_cast<int>(l.lists.size()) != g.size())
        throw input_error("find_list_violation: expected one list per vertex");
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    ViolationSearch search{g, l, std::nullopt, {}};
    search.dfs(all, {});
    return search.found;
}

bool perfectness_desk(const SimpleGraph& g, int max_n) {
    const int n = g.size();
    if (n > max_n)
        throw input_error("perfectness_desk: graph exceeds the size guard of " +
                          std::to_string(max_n));
    if (n == 0) return true;
    std::vector<unsigned> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> omega(full + 1, 0);
    std::vector<char> indep(full + 1, 1);
    for (unsigned mask = 1; mask <= full; ++mask) {
        const int v = __builtin_ctz(mask);
        const unsigned rest = mask & (mask - 1);
        omega[mask] = std::max(omega[rest], 1 + omega[rest & adj[v]]);
        indep[mask] = indep[rest] && ((rest & adj[v]) == 0);
    }
    std::vector<int> chi(full + 1, 0);
    for (unsigned mask = 1; mask <= full; ++mask) {
        const unsigned low = mask & ~(mask - 1);
        int best = n + 1;
        for (unsigned s = mask; s; s = (s - 1) & mask)
            if ((s & low) && indep[s]) best = std::min(best, 1 + chi[mask ^ s]);
        chi[mask] = best;
        if (chi[mask] != omega[mask]) return false;
    }
    return true;
}

} // namespace elementum
