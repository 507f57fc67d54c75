#include <catch2/catch_amalgamated.hpp>

#include "tripts/generate.hpp"
#include "tripts/structure.hpp"

#include "helpers.hpp"

using namespace tripts;
using tripts::testing::chain_points;
using tripts::testing::points;

TEST_CASE("embedding of a single edge") {
    TriGraph g = build_cone_minimum(points({{0, 0}, {2, 1}}), Flavor::down);
    Embedding e = embed(g);
    REQUIRE(e.faces.size() == 1);
    CHECK(e.faces[0].size() == 2); // both directed sides of the one edge
    CHECK(e.outer_face == 0);
}

TEST_CASE("embedding of a triangle") {
    PointSet ps = points({{0, 0}, {7, 1}, {3, 5}});
    TriGraph g{ps, {{0, 1}, {0, 2}, {1, 2}}, Flavor::down};
    Embedding e = embed(g);
    REQUIRE(e.faces.size() == 2);
    CHECK(e.outer_walk().size() == 3);
    int inner = 1 - e.outer_face;
    CHECK(e.faces[inner].size() == 3);
    CHECK(detail::walk_area2(ps, e.faces[inner]).sign() > 0);
    CHECK(detail::walk_area2(ps, e.outer_walk()).sign() < 0);
}

TEST_CASE("down and up graphs are plane and internally triangulated") {
    for (unsigned long seed : {2ul, 9ul, 31ul}) {
        PointSet ps = random_general_position(20, seed);
        for (Flavor f : {Flavor::down, Flavor::up}) {
            TriGraph g = build_cone_minimum(ps, f);
            CHECK(check_planarity_by_segments(g));
            Embedding e = embed(g);
            CHECK(check_internal_triangulation(e));
            // Euler's formula with face count from the tracing
            long sum = 0;
            for (auto& w : e.faces) sum += long(w.size());
            CHECK(sum == 2 * long(g.edges.size()));
            CHECK(long(g.n()) - long(g.edges.size()) + long(e.faces.size()) == 2);
        }
    }
}

TEST_CASE("crossing drawing is rejected") {
    PointSet ps = points({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    TriGraph g{ps, {{0, 2}, {1, 3}}, Flavor::down};
    CHECK_FALSE(check_planarity_by_segments(g));
    CHECK_THROWS_AS(embed(g), std::logic_error);
}

TEST_CASE("block-cut decomposition on small graphs") {
    SECTION("triangle: single block, no cut vertices") {
        BlockCutTree bc = block_cut_tree(3, EdgeSet{{0, 1}, {0, 2}, {1, 2}});
        CHECK(bc.blocks.size() == 1);
        CHECK(bc.cut_vertices.empty());
    }
    SECTION("path: every interior vertex cuts") {
        BlockCutTree bc = block_cut_tree(4, EdgeSet{{0, 1}, {1, 2}, {2, 3}});
        CHECK(bc.blocks.size() == 3);
        CHECK(bc.cut_vertices == std::vector<int>{1, 2});
        CHECK(bc.is_path());
    }
    SECTION("two triangles sharing a vertex") {
        BlockCutTree bc =
            block_cut_tree(5, EdgeSet{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        CHECK(bc.blocks.size() == 2);
        CHECK(bc.cut_vertices == std::vector<int>{2});
        CHECK(bc.is_path());
    }
    SECTION("star: hub in three blocks is not a path") {
        BlockCutTree bc = block_cut_tree(4, EdgeSet{{0, 1}, {0, 2}, {0, 3}});
        CHECK_FALSE(bc.is_path());
    }
    SECTION("disconnected input rejected") {
        CHECK_THROWS_AS(block_cut_tree(4, EdgeSet{{0, 1}, {2, 3}}), std::invalid_argument);
    }
}

TEST_CASE("block-cut tree of the union graph is a path") {
    for (unsigned long seed : {1ul, 12ul, 27ul, 44ul}) {
        PointSet ps = random_general_position(24, seed);
        TriGraph uni = union_graph(build_cone_minimum(ps, Flavor::down),
                                   build_cone_minimum(ps, Flavor::up));
        BlockCutTree bc = block_cut_tree(uni);
        CHECK(bc.is_path());
        CHECK(check_cut_vertex_structure(uni));
    }
}

TEST_CASE("chain point set: union cut vertices and their cone structure") {
    PointSet ps = chain_points(7);
    TriGraph uni = union_graph(build_cone_minimum(ps, Flavor::down),
                               build_cone_minimum(ps, Flavor::up));
    BlockCutTree bc = block_cut_tree(uni);
    CHECK(bc.cut_vertices == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(check_cut_vertex_structure(uni));
}

TEST_CASE("cut vertices of down and up graphs lie on the outer face") {
    for (unsigned long seed : {5ul, 18ul, 33ul}) {
        PointSet ps = random_general_position(22, seed);
        for (Flavor f : {Flavor::down, Flavor::up}) {
            TriGraph g = build_cone_minimum(ps, f);
            Embedding e = embed(g);
            BlockCutTree bc = block_cut_tree(g);
            CHECK(check_cut_vertices_on_outer_face(e, bc));
        }
    }
}

TEST_CASE("path between any two points stays inside their smallest triangle") {
    PointSet ps = random_general_position(15, 8);
    for (Flavor f : {Flavor::down, Flavor::up}) {
        TriGraph g = build_cone_minimum(ps, f);
        Orientation o = f == Flavor::down ? Orientation::down : Orientation::up;
        for (int p = 0; p < g.n(); ++p) {
            for (int q = p + 1; q < g.n(); ++q) {
                auto path = check_path_in_triangle(g, p, q);
                REQUIRE(path.front() == p);
                REQUIRE(path.back() == q);
                FixedTriangle t = smallest_triangle(ps[p], ps[q], o);
                for (std::size_t i = 0; i < path.size(); ++i) {
                    CHECK(triangle_contains(t, ps[path[i]], ContainMode::closed));
                    if (i + 1 < path.size()) CHECK(g.has_edge(path[i], path[i + 1]));
                }
            }
        }
    }
}

TEST_CASE("components_without removes the requested vertices") {
    EdgeSet es{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    auto comps = components_without(4, es, {0, 2});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1});
    CHECK(comps[1] == std::vector<int>{3});
}
