#include <catch2/catch_amalgamated.hpp>

#include "tripts/augment.hpp"
#include "tripts/generate.hpp"

#include "helpers.hpp"

using namespace tripts;
using tripts::testing::chain_points;
using tripts::testing::points;

namespace {

AugmentedGraph augment_points(const PointSet& ps) {
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    Embedding e = embed(g);
    return augment(g, e);
}

void check_standard_properties(const PointSet& ps, const AugmentedGraph& a) {
    AugmentReport r = verify_augmented(a);
    CHECK(r.min_degree_three);
    CHECK(r.two_connected);
    CHECK(r.planar_embedding);
    CHECK(r.vertex_count_ok);
    CHECK(int(a.added_vertices.size()) <= 4);

    // base edges untouched, added edges all touch an added vertex
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    for (auto& e : g.edges) CHECK(a.graph.edges.count(e) == 1);
    for (auto& [u, v] : a.added_edges) CHECK((u >= a.base_n || v >= a.base_n));

    // restriction inequality: base matching >= augmented matching - added
    Matching big = max_matching(a.graph);
    Matching small = restrict_matching(a, big);
    CHECK(small.valid_for(a.base_n, g.edges));
    CHECK(small.size() >= big.size() - int(a.added_vertices.size()));
}

} // namespace

TEST_CASE("augmenting a triangle gives the complete graph on four vertices") {
    PointSet ps = points({{0, 0}, {7, 1}, {3, 5}});
    TriGraph g{ps, {{0, 1}, {0, 2}, {1, 2}}, Flavor::down};
    AugmentedGraph a = augment(g, embed(g));
    CHECK(a.graph.n == 4);
    CHECK(a.graph.edges.size() == 6);
    CHECK(a.added_vertices == std::vector<int>{3});
    AugmentReport r = verify_augmented(a);
    CHECK(r.pass());
}

TEST_CASE("augmenting a path (two degree-one vertices)") {
    PointSet ps = chain_points(5);
    AugmentedGraph a = augment_points(ps);
    CHECK(a.added_vertices.size() == 2);
    check_standard_properties(ps, a);
    // both endpoints of the path were lifted to degree >= 3
    auto deg = a.graph.degrees();
    CHECK(deg[0] >= 3);
    CHECK(deg[4] >= 3);
}

TEST_CASE("augmentation across a random corpus") {
    int saw_k[4] = {0, 0, 0, 0};
    for (unsigned long seed = 0; seed < 60; ++seed) {
        int n = 4 + int(seed % 25);
        PointSet ps = random_general_position(n, 9000 + seed);
        TriGraph g = build_cone_minimum(ps, Flavor::down);
        int k = int(degree_one_census(g).size());
        REQUIRE(k <= 3);
        ++saw_k[k];
        AugmentedGraph a = augment(g, embed(g));
        check_standard_properties(ps, a);
        // every augmented graph satisfies the planar matching bound
        PlanarMatchingReport nr = check_planar_matching_bound(a.graph);
        CHECK(nr.preconditions_ok);
        CHECK(nr.pass);
    }
    // the corpus must exercise several degree-one profiles
    CHECK(saw_k[0] + saw_k[1] + saw_k[2] + saw_k[3] == 60);
    CHECK(saw_k[2] > 0);
}

TEST_CASE("augmentation rejects tiny or disconnected inputs") {
    PointSet two = points({{0, 0}, {2, 1}});
    TriGraph g = build_cone_minimum(two, Flavor::down);
    CHECK_THROWS_AS(augment(g, embed(g)), std::invalid_argument);

    PointSet ps = points({{0, 0}, {7, 1}, {3, 5}});
    TriGraph disc{ps, {{0, 1}}, Flavor::down};
    CHECK_THROWS_AS(augment(disc, embed(disc)), std::invalid_argument);
}
