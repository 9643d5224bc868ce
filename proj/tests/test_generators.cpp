#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "elementum/augmentation.hpp"
#include "elementum/errors.hpp"
#include "elementum/gallai.hpp"
#include "elementum/generators.hpp"
#include "elementum/oracle.hpp"

#include "test_util.hpp"

using namespace elementum;
using namespace testutil;

namespace {

PeculiarSpec default_peculiar() {
    PeculiarSpec spec;
    for (int i = 0; i < 3; ++i) spec.removed[i] = {{0, 0}};
    return spec;
}

} // namespace

TEST_CASE("random bipartite multigraphs") {
    auto a = random_bipartite_multigraph(3, 4, 9, 2, 123);
    auto b = random_bipartite_multigraph(3, 4, 9, 2, 123);
    CHECK(a.edges == b.edges); // same seed, same draw
    CHECK(a.left == 3);
    CHECK(a.right == 4);
    CHECK(a.edges.size() == 9);
    std::map<std::pair<int, int>, int> mult;
    for (auto e : a.edges) {
        CHECK(e.first >= 0);
        CHECK(e.first < 3);
        CHECK(e.second >= 0);
        CHECK(e.second < 4);
        CHECK(++mult[e] <= 2);
    }
    auto c = random_bipartite_multigraph(3, 4, 9, 2, 124);
    CHECK(a.edges != c.edges); // overwhelmingly likely, and fixed by the seed

    CHECK_THROWS_AS(random_bipartite_multigraph(2, 2, 9, 2, 0), input_error); // cap 8
    CHECK_THROWS_AS(random_bipartite_multigraph(0, 2, 1, 1, 0), input_error);
}

TEST_CASE("random presentations realize to elementary graphs") {
    int made_matching = 0;
    int made_general = 0;
    for (uint64_t seed = 0; seed < 300 && (made_matching < 25 || made_general < 25); ++seed) {
        BipartiteMultigraph b = random_bipartite_multigraph(4, 4, 9, 2, seed);
        for (auto shape : {AugmentShape::matching, AugmentShape::general}) {
            int& made = shape == AugmentShape::matching ? made_matching : made_general;
            if (made >= 25) continue;
            ElementaryPresentation p;
            try {
                p = random_presentation(b, 2, seed, shape);
            } catch (const input_error&) {
                continue;
            }
            ++made;
            CHECK(p.augments.size() == 2);
            CHECK(p.b.edges == b.edges);
            for (const auto& a : p.augments) {
                CHECK_NOTHROW(a.validate());
                CHECK(a.x_size <= 3);
                CHECK(a.y_size <= 3);
                if (shape == AugmentShape::matching) {
                    CHECK(a.y_size <= a.x_size);
                    // the dropped cross pairs form a matching covering Y
                    std::set<int> xs, ys;
                    for (int i = 0; i < a.x_size; ++i)
                        for (int j = 0; j < a.y_size; ++j)
                            if (!a.has_cross(i, j)) {
                                CHECK(xs.insert(i).second);
                                CHECK(ys.insert(j).second);
                            }
                    CHECK(static_cast<int>(ys.size()) == a.y_size);
                }
            }
            CHECK(is_elementary(realize(p).graph).elementary);
        }
    }
    CHECK(made_matching == 25);
    CHECK(made_general == 25);
}

TEST_CASE("random presentation with no augments is just the root") {
    BipartiteMultigraph b = random_bipartite_multigraph(3, 3, 6, 2, 7);
    auto p = random_presentation(b, 0, 7, AugmentShape::general);
    CHECK(p.augments.empty());
    CHECK(p.flat_edges.empty());
    CHECK(realize(p).graph == line_graph(b).graph);
}

TEST_CASE("random presentation reports a shortfall of flat edges") {
    // a star's line graph is complete: no flat edge anywhere
    BipartiteMultigraph star;
    star.left = 1;
    star.right = 4;
    star.edges = {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    CHECK_THROWS_AS(random_presentation(star, 1, 3, AugmentShape::general), input_error);
}

TEST_CASE("peculiar graph: minimal spec") {
    auto pg = peculiar_graph(default_peculiar());
    CHECK(pg.graph.size() == 9);
    for (int i = 0; i < 3; ++i) {
        CHECK(pg.a_parts[i].size() == 1);
        CHECK(pg.b_parts[i].size() == 1);
        CHECK(pg.q_parts[i].size() == 1);
        // each Q_i sees the core minus A_i u B_i: 4 of the 6 core vertices
        CHECK(pg.graph.degree(pg.q_parts[i][0]) == 4);
    }
    CHECK_FALSE(has_claw(pg.graph));
    CHECK(perfectness_desk(pg.graph));
    CHECK_FALSE(is_elementary(pg.graph).elementary);
    CHECK_FALSE(elementary_bruteforce(pg.graph, pg.graph.edge_count()).has_value());
}

TEST_CASE("peculiar graph: fatter parts stay claw-free and non-elementary") {
    PeculiarSpec spec = default_peculiar();
    spec.a_sizes = {2, 1, 1};
    spec.q_sizes = {1, 2, 1};
    spec.removed[0] = {{0, 0}, {1, 0}};
    auto pg = peculiar_graph(spec);
    CHECK(pg.graph.size() == 2 + 1 + 1 + 3 + 1 + 2 + 1);
    CHECK_FALSE(has_claw(pg.graph));
    CHECK_FALSE(is_elementary(pg.graph).elementary);
}

TEST_CASE("peculiar graph: validation") {
    PeculiarSpec spec = default_peculiar();
    spec.removed[1].clear(); // every pair must lose at least one edge
    CHECK_THROWS_AS(peculiar_graph(spec), input_error);

    spec = default_peculiar();
    spec.removed[2] = {{1, 0}}; // out of range for a 1-vertex part
    CHECK_THROWS_AS(peculiar_graph(spec), input_error);

    spec = default_peculiar();
    spec.q_sizes = {0, 1, 1};
    CHECK_THROWS_AS(peculiar_graph(spec), input_error);

    spec = default_peculiar();
    spec.removed[0] = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(peculiar_graph(spec), input_error);
}

TEST_CASE("named graphs") {
    auto claw = named_graph("claw");
    CHECK(claw == complete_bipartite(1, 3));
    CHECK(named_graph("c5") == cycle_graph(5));
    CHECK(named_graph("c7") == cycle_graph(7));
    CHECK(named_graph("c7_complement") == complement(cycle_graph(7)));
    CHECK(named_graph("p3") == path_graph(3));
    CHECK(named_graph("k5") == complete_graph(5));
    CHECK(named_graph("k1").size() == 1);
    CHECK(named_graph("k64").size() == 64);
    CHECK_THROWS_AS(named_graph("c4"), input_error);
    CHECK_THROWS_AS(named_graph("k0"), input_error);
    CHECK_THROWS_AS(named_graph("k65"), input_error);
    CHECK_THROWS_AS(named_graph(""), input_error);
}
