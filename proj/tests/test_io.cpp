#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "tripts/generate.hpp"
#include "tripts/io.hpp"

#include "helpers.hpp"

using namespace tripts;
using tripts::testing::points;

TEST_CASE("rational formatting is canonical") {
    CHECK(format_rational(make_rational(6, 4)) == "3/2");
    CHECK(format_rational(make_rational(-2, 8)) == "-1/4");
    CHECK(format_rational(make_rational(5)) == "5/1");
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("-7/2") == make_rational(-7, 2));
    CHECK_THROWS_AS(parse_rational("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("points files round-trip byte-identically") {
    PointSet ps = random_general_position(17, 42);
    std::ostringstream first;
    write_points(first, ps);
    std::istringstream in(first.str());
    PointSet parsed = read_points(in);
    CHECK(parsed == ps);
    std::ostringstream second;
    write_points(second, parsed);
    CHECK(first.str() == second.str());
}

TEST_CASE("points files accept comments and reject malformed input") {
    std::istringstream good("# a comment\ntripts v1 2\n0/1 0/1 # inline\n2/1 1/1\n");
    PointSet ps = read_points(good);
    CHECK(ps.size() == 2);
    CHECK(ps[1].x == ExactScalar(make_rational(2)));

    std::istringstream bad_header("points v1 2\n0/1 0/1\n2/1 1/1\n");
    CHECK_THROWS_AS(read_points(bad_header), std::invalid_argument);
    std::istringstream truncated("tripts v1 3\n0/1 0/1\n2/1 1/1\n");
    CHECK_THROWS_AS(read_points(truncated), std::invalid_argument);
    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_AS(read_points(empty), std::invalid_argument);
}

TEST_CASE("graph export format") {
    PointSet ps = points({{0, 0}, {2, 1}, {5, 3}});
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    std::string flavor;
    std::getline(is, flavor);
    CHECK(flavor == "down");
    std::vector<Edge> listed;
    int u, v;
    while (is >> u >> v) listed.push_back({u, v});
    CHECK(listed.size() == g.edges.size());
    CHECK(std::is_sorted(listed.begin(), listed.end()));
    for (auto& e : listed) {
        CHECK(e.first < e.second);
        CHECK(g.edges.count(e) == 1);
    }
}

TEST_CASE("flavor names round-trip") {
    for (Flavor f : {Flavor::down, Flavor::up, Flavor::union_of, Flavor::intersection}) {
        CHECK(parse_flavor(flavor_name(f)) == f);
    }
    CHECK_THROWS_AS(parse_flavor("sideways"), std::invalid_argument);
}

TEST_CASE("run reports") {
    RunReport r;
    r.add("n", 12L);
    r.add("planarity", true);
    r.add("note", std::string("ok"));
    CHECK(r.all_checks_pass());
    r.add("triangulation", false);
    CHECK_FALSE(r.all_checks_pass());
    CHECK_THROWS_AS(r.add("n", 13L), std::logic_error);

    std::ostringstream os;
    r.print(os);
    std::istringstream is(os.str());
    RunReport parsed = RunReport::parse(is);
    CHECK(parsed.entries() == r.entries());
    CHECK_FALSE(parsed.all_checks_pass());
}
