#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "graphprod/dynamics.hpp"
#include "graphprod/error.hpp"

using fixtures::nf;
using graphprod::ExtVertex;
using graphprod::NormalForm;

TEST_CASE("bounded order") {
  const auto g = fixtures::dihedral();
  SUBCASE("identity has order 1") {
    const auto st = bounded_order(NormalForm(), 10, g);
    REQUIRE(st.finite());
    CHECK(*st.order == 1);
  }
  SUBCASE("an involution has order 2") {
    const auto st = bounded_order(nf(g, {{0, 1}}), 10, g);
    REQUIRE(st.finite());
    CHECK(*st.order == 2);
  }
  SUBCASE("ab exceeds any bound in the infinite dihedral group") {
    const auto st = bounded_order(nf(g, {{0, 1}, {1, 1}}), 50, g);
    CHECK(!st.finite());
    CHECK(st.bound == 50);
    // Oracle: (ab)^n never reduces.
    std::string p;
    for (int n = 1; n <= 50; ++n) {
      p = oracles::DihedralOracle::mul(p, "ab");
      CHECK(p.size() == 2 * static_cast<std::size_t>(n));
    }
  }
  SUBCASE("power consistency") {
    const auto z6 = fixtures::single(6);
    const auto gen = nf(z6, {{0, 1}});
    NormalForm g2 = multiply(gen, gen, z6);
    const auto st = bounded_order(g2, 10, z6);
    REQUIRE(st.finite());
    CHECK(*st.order == 3);
  }
}

TEST_CASE("fixed vertices of the conjugation action") {
  const auto g = fixtures::path3();
  const auto root = canonicalize_ext(1, NormalForm(), g);
  SUBCASE("identity fixes the whole explored ball") {
    const auto rep = fixed_ext_vertices(NormalForm(), root, 1, 2, 10000, g);
    CHECK(rep.fixed.size() == rep.ball_size);
  }
  SUBCASE("a vertex-group element fixes its own vertex") {
    const auto rep = fixed_ext_vertices(nf(g, {{1, 1}}), root, 1, 2, 10000, g);
    bool found = false;
    for (const auto& x : rep.fixed) {
      if (x == root) found = true;
    }
    CHECK(found);
  }
  SUBCASE("a_u c_w fixes (v,e) but not (u,e)") {
    const auto mover = nf(g, {{0, 1}, {2, 1}});
    const auto rep = fixed_ext_vertices(mover, root, 1, 2, 10000, g);
    bool fixes_v = false, fixes_u = false;
    for (const auto& x : rep.fixed) {
      if (x == canonicalize_ext(1, NormalForm(), g)) fixes_v = true;
      if (x == canonicalize_ext(0, NormalForm(), g)) fixes_u = true;
    }
    CHECK(fixes_v);
    CHECK(!fixes_u);
  }
}

TEST_CASE("wandering orbit experiment") {
  const auto g = fixtures::path3_z3();  // 0-1-2 with G_2 = Z_3
  SUBCASE("precondition errors") {
    CHECK_THROWS_WITH_AS(
        wandering_orbit_experiment(0, 2, {}, {}, 1, 2, 10000, g),
        doctest::Contains("NotInLink"), graphprod::Error);
    CHECK_THROWS_WITH_AS(
        wandering_orbit_experiment(0, 1, {nf(g, {{2, 1}})}, {}, 1, 2, 10000, g),
        doctest::Contains("NotInStabilizer"), graphprod::Error);
  }
  SUBCASE("trivial sequence lands in P(v, empty)") {
    const auto trace = wandering_orbit_experiment(1, 0, {NormalForm()},
                                                  {{}}, 1, 2, 10000, g);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].image == canonicalize_ext(0, NormalForm(), g));
    REQUIRE(trace.steps[0].in_p_set.size() == 1);
    CHECK(trace.steps[0].in_p_set[0]);
  }
  SUBCASE("stabilizer powers produce pairwise distinct images") {
    const std::vector<NormalForm> seq = {NormalForm(), nf(g, {{2, 1}}), nf(g, {{2, 2}})};
    const auto trace = wandering_orbit_experiment(1, 0, seq, {}, 1, 2, 10000, g);
    CHECK(trace.all_distinct);
    CHECK(trace.steps[1].image != trace.steps[2].image);
  }
  SUBCASE("blocking the v-u edge excludes exactly the unmoved image") {
    const ExtVertex center = canonicalize_ext(1, NormalForm(), g);
    const ExtVertex u = canonicalize_ext(0, NormalForm(), g);
    const std::vector<NormalForm> seq = {NormalForm(), nf(g, {{2, 1}})};
    const auto trace = wandering_orbit_experiment(1, 0, seq, {{{center, u}}}, 1, 2, 10000, g);
    REQUIRE(trace.steps.size() == 2);
    // g_0 = e keeps u in place: excluded. g_1 moves it: included.
    CHECK(!trace.steps[0].in_p_set[0]);
    CHECK(trace.steps[1].in_p_set[0]);
  }
}
