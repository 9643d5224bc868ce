#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "elementum/augmentation.hpp"
#include "elementum/errors.hpp"
#include "elementum/generators.hpp"
#include "elementum/graph_core.hpp"
#include "elementum/list_coloring.hpp"
#include "elementum/rng.hpp"

#include "test_util.hpp"

using namespace elementum;
using namespace testutil;

namespace {

// cobipartite graph on 0..x_size-1 (X) and x_size..x_size+y_size-1 (Y) whose
// cross NON-edges are exactly `missing` (pairs of X index, Y index)
SimpleGraph cobipartite(int x_size, int y_size,
                        const std::vector<std::pair<int, int>>& missing) {
    SimpleGraph g(x_size + y_size);
    for (int i = 0; i < x_size; ++i)
        for (int j = i + 1; j < x_size; ++j) g.add_edge(i, j);
    for (int i = 0; i < y_size; ++i)
        for (int j = i + 1; j < y_size; ++j) g.add_edge(x_size + i, x_size + j);
    for (int i = 0; i < x_size; ++i)
        for (int j = 0; j < y_size; ++j)
            if (std::find(missing.begin(), missing.end(), std::make_pair(i, j)) == missing.end())
                g.add_edge(i, x_size + j);
    return g;
}

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

ElementaryPresentation sample_presentation(uint64_t seed, int h, AugmentShape shape) {
    // rejection-sample until the greedy flat-edge pick succeeds
    for (uint64_t s = seed;; ++s) {
        BipartiteMultigraph b = random_bipartite_multigraph(4, 4, 8, 2, s);
        try {
            return random_presentation(b, h, s + 1, shape);
        } catch (const input_error&) {
        }
    }
}

} // namespace

TEST_CASE("verify_coloring") {
    auto k2 = complete_graph(2);
    ListAssignment l{{{1}, {2}}};
    CHECK(verify_coloring(k2, l, {1, 2}));
    CHECK_FALSE(verify_coloring(k2, l, {2, 2}));      // 2 not in L(0)
    ListAssignment same{{{1, 2}, {1, 2}}};
    CHECK_FALSE(verify_coloring(k2, same, {1, 1}));   // improper
    CHECK(verify_coloring(k2, same, {2, 1}));
    CHECK_THROWS_AS(verify_coloring(k2, l, {1, -1}), input_error); // partial
    CHECK_THROWS_AS(verify_coloring(k2, l, {1}), input_error);     // wrong size
}

TEST_CASE("clique_list_check") {
    auto k3 = complete_graph(3);
    ListAssignment small{{{1, 2}, {1, 2}, {2}}};
    auto v = clique_list_check(k3, small, {0, 1, 2});
    REQUIRE(v.has_value());
    CHECK(v->merged_list_size == 2);
    CHECK(v->clique == std::vector<int>{0, 1, 2});

    ListAssignment wide{{{1, 2}, {2, 3}, {1, 3}}};
    CHECK_FALSE(clique_list_check(k3, wide, {0, 1, 2}).has_value());

    auto p3 = path_graph(3);
    ListAssignment any{{{1}, {2}, {3}}};
    CHECK_THROWS_AS(clique_list_check(p3, any, {0, 1, 2}), input_error);
}

TEST_CASE("cobipartite clique number fixtures") {
    // full join of a 2-clique and a 1-clique: one clique of everything
    auto join = cobipartite(2, 1, {});
    CHECK(cobipartite_clique_number({0, 1}, {2}, join) == std::pair<int, int>{3, 0});

    // K4 minus a perfect matching is C4
    auto c4 = cobipartite(2, 2, {{0, 0}, {1, 1}});
    CHECK(cobipartite_clique_number({0, 1}, {2, 3}, c4) == std::pair<int, int>{2, 2});

    // one missing cross pair
    auto almost = cobipartite(2, 2, {{1, 1}});
    CHECK(cobipartite_clique_number({0, 1}, {2, 3}, almost) == std::pair<int, int>{3, 1});
}

TEST_CASE("cobipartite clique number matches brute force") {
    Rng rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const int xs = 1 + rng.below(6);
        const int ys = 1 + rng.below(6);
        std::vector<std::pair<int, int>> missing;
        for (int i = 0; i < xs; ++i)
            for (int j = 0; j < ys; ++j)
                if (rng.below(2)) missing.push_back({i, j});
        auto g = cobipartite(xs, ys, missing);
        auto [omega, mu] = cobipartite_clique_number(iota_vec(0, xs), iota_vec(xs, ys), g);
        CHECK(omega == static_cast<int>(max_clique_desk(g).size()));
        CHECK(omega + mu == xs + ys); // Koenig duality in the cross complement
    }
}

TEST_CASE("restrict_lists removes neighbourhood colours per side") {
    ListAssignment l{{{1, 2, 3}, {2, 3, 4}, {2}, {3}}};
    Coloring c{-1, -1, 2, 3};
    auto r = restrict_lists(l, c, {0}, {1}, {2}, {3});
    CHECK(r.at(0) == std::vector<int>{1, 3}); // colour 2 sits on N_X
    CHECK(r.at(1) == std::vector<int>{2, 4}); // colour 3 sits on N_Y
    CHECK(r.size() == 2);

    Coloring partial{-1, -1, -1, 3};
    CHECK_THROWS_AS(restrict_lists(l, partial, {0}, {1}, {2}, {3}), input_error);
}

TEST_CASE("tighten_to_matching") {
    SUBCASE("already a matching: nothing to add") {
        auto c4 = cobipartite(2, 2, {{0, 0}, {1, 1}});
        auto t = tighten_to_matching({0, 1}, {2, 3}, c4);
        REQUIRE(t.has_value());
        CHECK(t->graph == c4);
        std::set<std::pair<int, int>> kept(t->matching.begin(), t->matching.end());
        CHECK(kept == std::set<std::pair<int, int>>{{0, 2}, {1, 3}});
    }
    SUBCASE("extra non-edges get filled in") {
        auto loose = cobipartite(3, 1, {{0, 0}, {1, 0}, {2, 0}});
        auto t = tighten_to_matching({0, 1, 2}, {3}, loose);
        REQUIRE(t.has_value());
        CHECK(t->matching.size() == 1);
        CHECK(t->graph.edge_count() == loose.edge_count() + 2);
        // the kept pair is still a non-edge, everything else is now adjacent
        for (int x = 0; x < 3; ++x)
            CHECK(t->graph.has_edge(x, 3) == (std::make_pair(x, 3) != t->matching[0]));
    }
    SUBCASE("fails when no matching covers Y") {
        // both non-edges touch x = 0, so only one of two y's can be covered
        auto g = cobipartite(2, 2, {{0, 0}, {0, 1}});
        CHECK_FALSE(tighten_to_matching({0, 1}, {2, 3}, g).has_value());
    }
}

TEST_CASE("color_matching_cobipartite fixture: tight 2 + 2 square") {
    auto c4 = cobipartite(2, 2, {{0, 0}, {1, 1}});
    std::map<int, std::vector<int>> lists{
        {0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
    auto c = color_matching_cobipartite(c4, {0, 1}, {2, 3}, lists);
    // forced up to the first deterministic branch: colours repeat across the
    // matching non-edges
    CHECK(c == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}, {3, 2}});
}

TEST_CASE("color_matching_cobipartite fixture: single y") {
    auto g = cobipartite(2, 1, {{0, 0}});
    std::map<int, std::vector<int>> lists{{0, {5, 6}}, {1, {5, 6}}, {2, {5}}};
    auto c = color_matching_cobipartite(g, {0, 1}, {2}, lists);
    CHECK(c == std::map<int, int>{{0, 5}, {1, 6}, {2, 5}});
}

TEST_CASE("color_matching_cobipartite rejects unmet preconditions") {
    std::map<int, std::vector<int>> lists{
        {0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
    // |X| < |Y|
    auto g1 = cobipartite(1, 2, {{0, 0}});
    CHECK_THROWS_AS(
        color_matching_cobipartite(g1, {0}, {1, 2}, {{0, {1}}, {1, {1}}, {2, {1}}}),
        input_error);
    // non-edges are not a matching
    auto g2 = cobipartite(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(color_matching_cobipartite(g2, {0, 1}, {2, 3}, lists), input_error);
    // y uncovered: all cross edges present
    auto g3 = cobipartite(2, 2, {{0, 0}});
    CHECK_THROWS_AS(color_matching_cobipartite(g3, {0, 1}, {2, 3}, lists), input_error);
    // short list on X
    auto g4 = cobipartite(2, 2, {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(color_matching_cobipartite(
                        g4, {0, 1}, {2, 3},
                        {{0, {1}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}}),
                    input_error);
}

TEST_CASE("color_matching_cobipartite succeeds on random tight instances") {
    Rng rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const int k1 = 1 + rng.below(5);
        const int k2 = 1 + rng.below(k1);
        // random injection Y -> X gives the matching of non-edges
        std::vector<int> xs = iota_vec(0, k1);
        for (int i = 0; i < k2; ++i) std::swap(xs[i], xs[i + rng.below(k1 - i)]);
        std::vector<std::pair<int, int>> missing;
        for (int j = 0; j < k2; ++j) missing.push_back({xs[j], j});
        auto g = cobipartite(k1, k2, missing);

        std::map<int, std::vector<int>> lists;
        const int universe = 2 * k1 + 1;
        auto draw = [&](int size) {
            std::set<int> s;
            while (static_cast<int>(s.size()) < size) s.insert(rng.below(universe));
            return std::vector<int>(s.begin(), s.end());
        };
        for (int v = 0; v < k1; ++v) lists[v] = draw(k1);
        for (int v = 0; v < k2; ++v) lists[k1 + v] = draw(k2);

        auto c = color_matching_cobipartite(g, iota_vec(0, k1), iota_vec(k1, k2), lists);
        REQUIRE(c.size() == static_cast<size_t>(k1 + k2));
        for (auto [v, col] : c) {
            const auto& lv = lists.at(v);
            CHECK(std::find(lv.begin(), lv.end(), col) != lv.end());
            for (int w : g.neighbors(v))
                if (c.count(w)) CHECK(c.at(w) != col);
        }
    }
}

TEST_CASE("choose_blocking_pair picks the least cross edge in all maximum cliques") {
    std::map<int, std::vector<int>> unused;
    // cross edges (0,2), (0,3), (1,2): maximum cliques {0,1,2} and {0,2,3}
    auto g = cobipartite(2, 2, {{1, 1}});
    auto pick = choose_blocking_pair({0, 1}, {2, 3}, g, unused);
    REQUIRE(pick.has_value());
    CHECK(*pick == std::pair<int, int>{0, 2});

    // no cross edges at all: the maximum cliques are disjoint
    auto split = cobipartite(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_FALSE(choose_blocking_pair({0, 1}, {2, 3}, split, unused).has_value());
}

TEST_CASE("engine: augment-free presentation is plain list edge coloring") {
    ElementaryPresentation p;
    p.b.left = 1;
    p.b.right = 3;
    p.b.edges = {{0, 0}, {0, 1}, {0, 2}};
    ListAssignment l{{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
    auto res = list_color_elementary(p, l);
    REQUIRE(res.coloring.has_value());
    std::set<int> used(res.coloring->begin(), res.coloring->end());
    CHECK(used == std::set<int>{1, 2, 3}); // the realization is K3
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.stats.recolor_rounds == 0);
}

TEST_CASE("engine: one gadget, clique-size lists") {
    CobipartiteAugment h;
    h.x_size = 2;
    h.y_size = 2;
    h.cross_edges = {{0, 0}, {1, 1}};
    ElementaryPresentation p;
    p.b.left = 2;
    p.b.right = 2;
    p.b.edges = {{0, 0}, {1, 0}, {1, 1}};
    p.flat_edges = {{1, 2}};
    p.augments = {h};

    auto r = realize(p);
    const int omega = static_cast<int>(max_clique_desk(r.graph).size());
    REQUIRE(omega == 3);
    ListAssignment l;
    l.lists.assign(r.graph.size(), {0, 1, 2});
    auto res = list_color_elementary(p, l);
    REQUIRE(res.coloring.has_value());
    CHECK(verify_coloring(r.graph, l, *res.coloring));

    // a list below the clique number is rejected up front
    ListAssignment base = l;
    base.lists[3] = {0, 1};
    CHECK_THROWS_AS(list_color_elementary(p, base), input_error);
    ListAssignment off = l;
    off.lists.pop_back();
    CHECK_THROWS_AS(list_color_elementary(p, off), input_error);
}

TEST_CASE("engine: blocked gadget forces a root rebuild") {
    // tight lists admitting no direct gadget completion: the engine must go
    // through at least one recolouring round and still land a valid colouring
    ElementaryPresentation p;
    p.b.left = 4;
    p.b.right = 4;
    p.b.edges = {{3, 0}, {3, 0}, {0, 1}, {2, 3}, {0, 2}, {2, 2}, {0, 0}, {3, 3}};
    p.flat_edges = {{3, 5}};
    CobipartiteAugment h;
    h.x_size = 3;
    h.y_size = 3;
    h.cross_edges = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 2}};
    p.augments = {h};

    ListAssignment l;
    l.lists = {{0, 1, 2, 4}, {0, 2, 3, 4}, {0, 1, 2, 4}, {0, 2, 4, 5},
               {0, 1, 3, 4}, {1, 3, 4, 5}, {0, 1, 3, 4}, {0, 1, 3, 4},
               {0, 1, 3, 4}, {0, 3, 4, 5}, {0, 1, 3, 4}, {0, 2, 3, 4}};

    auto r = realize(p);
    REQUIRE(r.graph.size() == 12);
    REQUIRE(max_clique_desk(r.graph).size() == 4);
    auto res = list_color_elementary(p, l);
    REQUIRE(res.coloring.has_value());
    CHECK(verify_coloring(r.graph, l, *res.coloring));
    CHECK(res.stats.recolor_rounds >= 1);
    CHECK(res.stats.fallback_invocations == 0);
    CHECK_FALSE(res.stats.events.empty());
}

TEST_CASE("engine: random presentations with tight lists") {
    Rng rng(73);
    long long rounds = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto shape = trial % 2 ? AugmentShape::matching : AugmentShape::general;
        ElementaryPresentation p = sample_presentation(1000 + 17 * trial, 1 + trial % 2, shape);
        auto r = realize(p);
        const int omega = static_cast<int>(max_clique_desk(r.graph).size());

        ListAssignment l;
        l.lists.resize(r.graph.size());
        for (int v = 0; v < r.graph.size(); ++v) {
            const int universe = omega + (v % 2) * (trial % 3);
            std::set<int> s;
            while (static_cast<int>(s.size()) < omega) s.insert(rng.below(universe + 1));
            l.lists[v].assign(s.begin(), s.end());
        }

        auto res = list_color_elementary(p, l);
        if (res.certificate.has_value()) {
            CAPTURE(res.certificate->kind);
            CAPTURE(res.certificate->message);
            FAIL("engine returned a certificate on a feasible instance");
        }
        REQUIRE(res.coloring.has_value());
        CHECK(verify_coloring(r.graph, l, *res.coloring));
        rounds += res.stats.recolor_rounds;
        CHECK(res.stats.fallback_invocations == 0);
        CHECK(res.stats.cycle_breaks == 0);

        // determinism: same input, same output
        auto again = list_color_elementary(p, l);
        REQUIRE(again.coloring.has_value());
        CHECK(*again.coloring == *res.coloring);
    }
    MESSAGE("recolor rounds across engine stress: ", rounds);
}
