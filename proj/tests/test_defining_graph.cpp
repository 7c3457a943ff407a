#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "graphprod/defining_graph.hpp"
#include "graphprod/error.hpp"

using graphprod::DefiningGraph;
using graphprod::Error;
using graphprod::VertexId;

TEST_CASE("path has no circuit, girth infinity") {
  const auto g = fixtures::path3();
  CHECK(!g.girth().has_value());
}

TEST_CASE("triangle flags girth 3") {
  const auto g = fixtures::make({2, 2, 2}, {{0, 1}, {1, 2}, {0, 2}});
  REQUIRE(g.girth().has_value());
  CHECK(*g.girth() == 3);
}

TEST_CASE("girth of cycles") {
  CHECK(*fixtures::cycle5().girth() == 5);
  CHECK(*fixtures::cycle4_z3().girth() == 4);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(fixtures::make({2, 2}, {{0, 0}}), doctest::Contains("LoopEdge"), Error);
  CHECK_THROWS_WITH_AS(fixtures::make({2, 2}, {{0, 1}, {1, 0}}),
                       doctest::Contains("DuplicateEdge"), Error);
  CHECK_THROWS_WITH_AS(fixtures::make({2, 2}, {{0, 5}}), doctest::Contains("UnknownVertex"),
                       Error);
  CHECK_THROWS_WITH_AS(fixtures::make({2, 1}, {}), doctest::Contains("TrivialVertexGroup"),
                       Error);
}

TEST_CASE("neighborhood queries on the path") {
  const auto g = fixtures::path3();
  CHECK(g.link(1) == std::vector<VertexId>{0, 2});
  CHECK(g.star(1) == std::vector<VertexId>{0, 1, 2});
  CHECK(g.is_leaf(0));
  CHECK(!g.is_leaf(1));
  CHECK(g.elink(1).size() == 2);
  CHECK_THROWS_WITH_AS(g.link(9), doctest::Contains("UnknownVertex"), Error);
}

TEST_CASE("link and star agree with brute-force scans of the edge set") {
  const auto g = fixtures::cycle5();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::set<VertexId> brute;
    for (auto [a, b] : g.edges()) {
      if (a == v) brute.insert(b);
      if (b == v) brute.insert(a);
    }
    const auto link = g.link(v);
    CHECK(std::set<VertexId>(link.begin(), link.end()) == brute);
    CHECK(g.is_leaf(v) == (brute.size() <= 1));
  }
}

TEST_CASE("finiteness predicates on the path") {
  const auto rep = fixtures::path3().finiteness_predicates();
  CHECK(rep.leaves == std::set<VertexId>{0, 2});
  CHECK(rep.non_leaves == std::set<VertexId>{1});
  REQUIRE(rep.diameter.has_value());
  CHECK(*rep.diameter == 2);
  CHECK(rep.diam_gt_1);
  CHECK(!rep.diam_gt_2);
  // |Lk(middle) \ leaf| = 0: both neighbors are leaves.
  CHECK(rep.link_minus_leaf_size[1] == 0);
}

TEST_CASE("finiteness predicates on the 5-cycle") {
  const auto rep = fixtures::cycle5().finiteness_predicates();
  CHECK(rep.leaves.empty());
  CHECK(rep.non_leaves.size() == 5);
  CHECK(*rep.diameter == 2);
}

TEST_CASE("finiteness predicates on the star") {
  const auto rep = fixtures::star4().finiteness_predicates();
  CHECK(rep.non_leaves == std::set<VertexId>{0});
  CHECK(rep.link_minus_leaf_size[0] == 0);
}

TEST_CASE("disconnected graph reports infinite diameter") {
  const auto rep = fixtures::dihedral().finiteness_predicates();
  CHECK(!rep.diameter.has_value());
  CHECK(rep.diam_gt_2);
}

TEST_CASE("gamma distance") {
  const auto g = fixtures::path3();
  CHECK(*g.gamma_distance(0, 2) == 2);
  CHECK(*g.gamma_distance(1, 1) == 0);
  CHECK(!fixtures::dihedral().gamma_distance(0, 1).has_value());
}
