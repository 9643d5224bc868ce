#include <doctest.h>

#include <algorithm>
#include <set>

#include "elementum/errors.hpp"
#include "elementum/graph_core.hpp"
#include "elementum/rng.hpp"

#include "test_util.hpp"

using namespace elementum;
using namespace testutil;

TEST_CASE("simple graph construction and basic queries") {
    SimpleGraph g(4);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // same edge, idempotent
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 1);
    CHECK(g.neighbors(3) == std::vector<int>{2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(1, 1), input_error);
    CHECK_THROWS_AS(g.add_edge(0, 4), input_error);
    CHECK_THROWS_AS(g.add_edge(-1, 0), input_error);
    CHECK(SimpleGraph::from_edges(4, {{0, 1}, {2, 3}}) == g);
}

TEST_CASE("neighbors come back sorted") {
    SimpleGraph g(5);
    g.add_edge(3, 1);
    g.add_edge(3, 4);
    g.add_edge(3, 0);
    CHECK(g.neighbors(3) == std::vector<int>{0, 1, 4});
}

TEST_CASE("bipartite multigraph validation and degrees") {
    BipartiteMultigraph b;
    b.left = 2;
    b.right = 2;
    b.edges = {{0, 0}, {0, 0}, {1, 1}};
    b.validate();
    CHECK(b.degree_left(0) == 2);
    CHECK(b.degree_right(0) == 2);
    CHECK(b.degree_left(1) == 1);
    CHECK(b.max_degree() == 2);

    BipartiteMultigraph bad = b;
    bad.edges.push_back({2, 0});
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = b;
    bad.edges.push_back({0, -1});
    CHECK_THROWS_AS(bad.validate(), input_error);
}

TEST_CASE("line graph of small multigraphs") {
    // path a-b-c: two edges sharing b
    BipartiteMultigraph path;
    path.left = 2;
    path.right = 1;
    path.edges = {{0, 0}, {1, 0}};
    auto lg = line_graph(path);
    CHECK(lg.graph.size() == 2);
    CHECK(lg.graph.has_edge(0, 1));

    // star with 3 edges at one left vertex -> K3
    BipartiteMultigraph star;
    star.left = 1;
    star.right = 3;
    star.edges = {{0, 0}, {0, 1}, {0, 2}};
    auto lstar = line_graph(star);
    CHECK(lstar.graph == complete_graph(3));

    // two parallel edges share both endpoints -> adjacent
    BipartiteMultigraph par;
    par.left = 1;
    par.right = 1;
    par.edges = {{0, 0}, {0, 0}};
    auto lpar = line_graph(par);
    CHECK(lpar.graph == complete_graph(2));

    BipartiteMultigraph empty;
    empty.left = 1;
    empty.right = 1;
    CHECK_THROWS_AS(line_graph(empty), input_error);
}

TEST_CASE("line graph degree identity") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        BipartiteMultigraph b;
        b.left = 1 + rng.below(4);
        b.right = 1 + rng.below(4);
        const int m = 1 + rng.below(8);
        for (int e = 0; e < m; ++e) b.edges.emplace_back(rng.below(b.left), rng.below(b.right));
        auto lg = line_graph(b);
        for (int e = 0; e < m; ++e) {
            // parallel copies meet e at both endpoints but contribute one edge
            int parallel = 0;
            for (int f = 0; f < m; ++f)
                if (f != e && b.edges[f] == b.edges[e]) ++parallel;
            const int expected = (b.degree_left(b.edges[e].first) - 1) +
                                 (b.degree_right(b.edges[e].second) - 1) - parallel;
            CHECK(lg.graph.degree(e) == expected);
        }
    }
}

TEST_CASE("bipartiteness with partition or odd-cycle witness") {
    auto c4 = cycle_graph(4);
    auto r4 = is_bipartite(c4);
    CHECK(r4.bipartite);
    for (auto [u, v] : c4.edges()) CHECK(r4.side[u] != r4.side[v]);

    auto c5 = cycle_graph(5);
    auto r5 = is_bipartite(c5);
    CHECK_FALSE(r5.bipartite);
    CHECK(r5.odd_cycle.size() == 5);

    SimpleGraph lonely(3);
    CHECK(is_bipartite(lonely).bipartite);
}

TEST_CASE("odd-cycle witnesses are genuine odd cycles") {
    Rng rng(7);
    int witnessed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SimpleGraph g = random_graph(3 + rng.below(8), 20 + rng.below(60), rng);
        auto r = is_bipartite(g);
        CHECK(r.bipartite == brute_bipartite(g));
        if (r.bipartite) continue;
        ++witnessed;
        const auto& cyc = r.odd_cycle;
        CHECK(cyc.size() % 2 == 1);
        CHECK(cyc.size() >= 3);
        std::set<int> distinct(cyc.begin(), cyc.end());
        CHECK(distinct.size() == cyc.size());
        for (size_t i = 0; i < cyc.size(); ++i)
            CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
    CHECK(witnessed > 20);
}

TEST_CASE("maximum matching equals brute force") {
    SUBCASE("k22 minus an edge") {
        SimpleGraph g = complete_bipartite(2, 2);
        // removing one cross edge still leaves a perfect matching
        SimpleGraph h(4);
        h.add_edge(0, 2);
        h.add_edge(0, 3);
        h.add_edge(1, 3);
        auto matching = max_matching_bipartite(h, {0, 1}, {2, 3});
        CHECK(matching.size() == 2);
        (void)g;
    }
    SUBCASE("edgeless") {
        SimpleGraph g(4);
        CHECK(max_matching_bipartite(g, {0, 1}, {2, 3}).empty());
    }
    SUBCASE("k32 bounded by the smaller side") {
        SimpleGraph g = complete_bipartite(3, 2);
        CHECK(max_matching_bipartite(g, {0, 1, 2}, {3, 4}).size() == 2);
    }
    SUBCASE("random instances") {
        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int a = 1 + rng.below(5), b = 1 + rng.below(5);
            SimpleGraph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = a; v < a + b; ++v)
                    if (rng.below(100) < 50) g.add_edge(u, v);
            std::vector<int> pa(a), pb(b);
            for (int i = 0; i < a; ++i) pa[i] = i;
            for (int j = 0; j < b; ++j) pb[j] = a + j;
            auto matching = max_matching_bipartite(g, pa, pb);
            CHECK(static_cast<int>(matching.size()) == brute_matching_max(g));
            std::set<int> touched;
            for (auto [u, v] : matching) {
                CHECK(g.has_edge(u, v));
                CHECK(touched.insert(u).second);
                CHECK(touched.insert(v).second);
            }
        }
    }
    SUBCASE("bad partitions are rejected") {
        SimpleGraph g(3);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(max_matching_bipartite(g, {0, 1}, {1, 2}), input_error);
        SimpleGraph tri = complete_graph(3);
        CHECK_THROWS_AS(max_matching_bipartite(tri, {0, 1}, {2}), input_error);
    }
}

TEST_CASE("maximum clique equals brute force") {
    CHECK(max_clique_desk(complete_graph(4)).size() == 4);
    CHECK(max_clique_desk(cycle_graph(5)).size() == 2);
    SimpleGraph k4m = complete_graph(4);
    // drop one edge: clique number falls to 3
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    CHECK(max_clique_desk(g).size() == 3);
    (void)k4m;

    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        SimpleGraph r = random_graph(1 + rng.below(11), 10 + rng.below(80), rng);
        auto clique = max_clique_desk(r);
        CHECK(static_cast<int>(clique.size()) == brute_clique_max(r));
        CHECK(std::is_sorted(clique.begin(), clique.end()));
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) CHECK(r.has_edge(clique[i], clique[j]));
        CHECK(max_clique_desk(r) == clique); // deterministic
    }
}

TEST_CASE("induced subgraphs and complements") {
    SimpleGraph c5 = cycle_graph(5);
    auto whole = induced_subgraph(c5, {0, 1, 2, 3, 4});
    CHECK(whole.graph == c5);
    CHECK(whole.original == std::vector<int>{0, 1, 2, 3, 4});

    auto sub = induced_subgraph(complete_graph(4), {1, 3});
    CHECK(sub.graph == complete_graph(2));

    auto p3 = induced_subgraph(c5, {0, 1, 2});
    CHECK(p3.graph == path_graph(3));

    CHECK_THROWS_AS(induced_subgraph(c5, {0, 7}), input_error);

    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        SimpleGraph g = random_graph(2 + rng.below(9), 50, rng);
        CHECK(complement(complement(g)) == g);
    }
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    SimpleGraph cc4 = complement(cycle_graph(4));
    CHECK(cc4.edge_count() == 2);
    CHECK(cc4.has_edge(0, 2));
    CHECK(cc4.has_edge(1, 3));
}
