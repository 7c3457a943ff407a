#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "graphprod/cayley.hpp"
#include "graphprod/explore.hpp"

using fixtures::nf;
using graphprod::CayleyGraph;
using graphprod::NormalForm;

TEST_CASE("neighbor counts and spec examples") {
  SUBCASE("single Z_3 vertex: identity has 2 neighbors") {
    const auto g = fixtures::single(3);
    CayleyGraph cayley(g);
    CHECK(cayley.neighbors(cayley.origin()).size() == 2);
  }
  SUBCASE("edge fixture: neighbors of 1 are the two generators") {
    const auto g = fixtures::square();
    CayleyGraph cayley(g);
    std::set<std::string> keys;
    for (const auto& nb : cayley.neighbors(cayley.origin())) keys.insert(nb.key());
    CHECK(keys == std::set<std::string>{"0:1", "1:1"});
  }
  SUBCASE("dihedral: neighbors of [a] are identity and [a b]") {
    const auto g = fixtures::dihedral();
    CayleyGraph cayley(g);
    std::set<std::string> keys;
    for (const auto& nb : cayley.neighbors(nf(g, {{0, 1}}))) keys.insert(nb.key());
    CHECK(keys == std::set<std::string>{"e", "0:1 1:1"});
  }
}

TEST_CASE("dihedral sphere sizes are 1,2,2,2,...") {
  const auto g = fixtures::dihedral();
  CayleyGraph cayley(g);
  const auto snap = ball_bfs(cayley, cayley.origin(), 5);
  CHECK(snap.core.sphere_sizes() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  // Oracle cross-check: alternating strings of each length.
  for (int r = 1; r <= 5; ++r) {
    std::set<std::string> strings;
    for (char first : {'a', 'b'}) {
      std::string s;
      for (int i = 0; i < r; ++i) s += (i % 2 == 0) == (first == 'a') ? 'a' : 'b';
      if (oracles::DihedralOracle::reduce(s) == s) strings.insert(s);
    }
    CHECK(strings.size() == 2);
  }
}

TEST_CASE("square fixture: whole group has 4 elements") {
  const auto g = fixtures::square();
  CayleyGraph cayley(g);
  const auto snap = ball_bfs(cayley, cayley.origin(), 2);
  CHECK(snap.core.size() == 4);
  CHECK(snap.core.complete);
}

TEST_CASE("word metric equals syllable length on the radius-5 ball") {
  for (const auto& g : {fixtures::path3(), fixtures::dihedral(), fixtures::cycle5()}) {
    CayleyGraph cayley(g);
    const auto snap = ball_bfs(cayley, cayley.origin(), 5, 100000);
    for (std::size_t i = 0; i < snap.core.size(); ++i) {
      CHECK(snap.core.dist[i] == static_cast<int>(snap.verts[i].length()));
      CHECK(cayley.distance(cayley.origin(), snap.verts[i]) == snap.core.dist[i]);
    }
  }
}

TEST_CASE("sphere sizes agree from any base vertex (vertex transitivity)") {
  const auto g = fixtures::path3();
  CayleyGraph cayley(g);
  const auto from_identity = ball_bfs(cayley, cayley.origin(), 4);
  const auto from_shifted = ball_bfs(cayley, nf(g, {{0, 1}, {1, 1}, {2, 1}}), 4);
  CHECK(from_identity.core.sphere_sizes() == from_shifted.core.sphere_sizes());
}

TEST_CASE("geodesics in the Cayley graph") {
  SUBCASE("square: two geodesics from 1 to the far corner") {
    const auto g = fixtures::square();
    CayleyGraph cayley(g);
    const auto target = nf(g, {{0, 1}, {1, 1}});
    const auto snap = ball_bfs_to_target(cayley, cayley.origin(), target);
    const auto geos = geodesic_paths(snap.core, 0, snap.core.index_of(target.key()));
    CHECK(geos.paths.size() == 2);
  }
  SUBCASE("dihedral: unique geodesic to abab") {
    const auto g = fixtures::dihedral();
    CayleyGraph cayley(g);
    const auto target = nf(g, {{0, 1}, {1, 1}, {0, 1}, {1, 1}});
    const auto snap = ball_bfs_to_target(cayley, cayley.origin(), target);
    const auto geos = geodesic_paths(snap.core, 0, snap.core.index_of(target.key()));
    CHECK(geos.paths.size() == 1);
  }
}

TEST_CASE("girth spec examples") {
  SUBCASE("Cayley graph of Z_3 is a triangle") {
    const auto g = fixtures::single(3);
    CayleyGraph cayley(g);
    const auto res = girth(cayley, cayley.origin(), {.search_radius = 3, .cap = 1000});
    CHECK(res.kind == graphprod::GirthResult::Kind::Finite);
    CHECK(res.value == 3);
  }
  SUBCASE("dihedral Cayley graph is a line: no circuit ever found") {
    const auto g = fixtures::dihedral();
    CayleyGraph cayley(g);
    const auto res = girth(cayley, cayley.origin(), {.search_radius = 4, .cap = 1000});
    CHECK(res.kind == graphprod::GirthResult::Kind::Unknown);
    CHECK(res.value == 9);
  }
}

TEST_CASE("gromov product spec example: (a, ab)_1 = 1 in the dihedral group") {
  const auto g = fixtures::dihedral();
  CayleyGraph cayley(g);
  const auto a = nf(g, {{0, 1}});
  const auto ab = nf(g, {{0, 1}, {1, 1}});
  CHECK(gromov_product(cayley, a, ab, cayley.origin()) == 1.0);
  CHECK(gromov_product(cayley, a, a, a) == 0.0);
  CHECK(gromov_product(cayley, cayley.origin(), ab, cayley.origin()) == 0.0);
}

TEST_CASE("edge label distance") {
  const auto g = fixtures::path3();
  using graphprod::Syllable;
  CHECK(*edge_label_distance(Syllable{1, 1}, Syllable{1, 1}, g) == 0);
  CHECK(*edge_label_distance(Syllable{0, 1}, Syllable{1, 1}, g) == 1);
  CHECK(*edge_label_distance(Syllable{0, 1}, Syllable{2, 1}, g) == 2);
  const auto d = fixtures::dihedral();
  CHECK(!edge_label_distance(Syllable{0, 1}, Syllable{1, 1}, d).has_value());
}

TEST_CASE("triangle bound |C(e,3)| <= |G_v|^2 on radius-4 balls") {
  for (const auto& g : {fixtures::path3_z3(), fixtures::single(4), fixtures::square()}) {
    CayleyGraph cayley(g);
    const auto ball = ball_bfs(cayley, cayley.origin(), 4, 50000);
    for (std::size_t i = 0; i < ball.core.size(); ++i) {
      const auto edge_ball = ball_bfs(cayley, ball.verts[i], 1);
      for (const auto& [nbr, label] : cayley.labeled_neighbors(ball.verts[i])) {
        const int b = edge_ball.core.index_of(nbr.key());
        REQUIRE(b >= 0);
        const auto circuits = circuits_through_edge_core(edge_ball.core, 0, b, 3);
        const int order = g.group(label.vertex)->order();
        CHECK(circuits.circuits.size() <= static_cast<std::size_t>(order) * order);
      }
    }
  }
}

TEST_CASE("squares through edges count commuting partners") {
  // Path fixture: an edge labelled at the end vertex u sits in 1 square
  // (u commutes only with v); an edge labelled at the middle sits in 2.
  const auto g = fixtures::path3();
  CayleyGraph cayley(g);
  const auto ball = ball_bfs(cayley, cayley.origin(), 2);
  auto squares_through = [&](graphprod::VertexId label_vertex) {
    const auto head = nf(g, {{label_vertex, 1}});
    const int b = ball.core.index_of(head.key());
    REQUIRE(b >= 0);
    const auto res = circuits_through_edge_core(ball.core, 0, b, 4);
    std::size_t count = 0;
    for (const auto& c : res.circuits) {
      if (c.size() == 4) ++count;
    }
    return count;
  };
  CHECK(squares_through(0) == 1);
  CHECK(squares_through(1) == 2);
  CHECK(squares_through(2) == 1);
}

TEST_CASE("hyperbolicity echo on girth > 4 fixtures (small radius)") {
  for (const auto& g : {fixtures::path3(), fixtures::star4()}) {
    CayleyGraph cayley(g);
    const auto res = bigon_check(cayley, cayley.origin(), 3, 4, 2, 20000);
    CHECK(res.pass);
  }
}

TEST_CASE("four point delta on the dihedral line is 0") {
  const auto g = fixtures::dihedral();
  CayleyGraph cayley(g);
  const auto res = four_point_delta(cayley, cayley.origin(), 5);
  CHECK(res.exhaustive);
  CHECK(res.delta == 0.0);
}
