#include <doctest.h>

#include <cstdlib>
#include <random>

#include "qal/invariants.hpp"
#include "support/fixtures.hpp"
#include "support/goeritz.hpp"
#include "support/random_diagrams.hpp"

using namespace qal;
using qal::testing::fx;
using qal::testing::poly;

namespace {

HalfLaurent a_poly(std::initializer_list<std::pair<int, int>> terms) {
  HalfLaurent p;
  for (auto [power, c] : terms) p.add_term(2 * power, c);
  return p;
}

}  // namespace

TEST_CASE("bracket_statesum examples") {
  CHECK(bracket_statesum(Diagram::unknot()) == HalfLaurent::constant(1));
  CHECK(bracket_statesum(disjoint_union(Diagram::unknot(), Diagram::unknot())) == a_poly({{-2, -1}, {2, -1}}));
  CHECK(bracket_statesum(parse_pd("X[1,1,2,2]")) == a_poly({{3, -1}}));
  CHECK(bracket_statesum(parse_pd("X[2,1,1,2]")) == a_poly({{-3, -1}}));
}

TEST_CASE("bracket_skein agrees with the state sum") {
  CHECK(bracket_skein(Diagram::unknot()) == HalfLaurent::constant(1));
  for (const auto& f : builtin_fixtures()) {
    CAPTURE(f.name);
    CHECK(bracket_skein(f.diagram) == bracket_statesum(f.diagram));
  }
  BracketCache cache;
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed(), 200, 12)) {
    CAPTURE(to_pd(r.diagram));
    CHECK(bracket_skein(r.diagram, Limits{}, &cache) == bracket_statesum(r.diagram));
  }
  CHECK(cache.size() > 0);
}

TEST_CASE("jones examples") {
  CHECK(jones(Diagram::unknot()) == HalfLaurent::constant(1));
  CHECK(jones(fx("HOPF_N")) == poly("-t^(-1/2)-t^(-5/2)"));
  CHECK(jones(fx("TREF_L")) == poly("-t^(-4)+t^(-3)+t^(-1)"));
  CHECK(jones(fx("FIG8")) == poly("t^(-2)-t^(-1)+1-t+t^(2)"));
  CHECK(jones(fx("FIG8"), BracketMethod::statesum) == poly("t^(-2)-t^(-1)+1-t+t^(2)"));
}

TEST_CASE("jones normalization rejects odd A powers") {
  CHECK_THROWS_AS(jones_from_bracket(a_poly({{1, 1}}), 0), InvariantViolation);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Diagram::unknot()) == 1);
  CHECK(determinant(fx("TREF_L")) == 3);
  CHECK(determinant(disjoint_union(fx("TREF_L"), fx("HOPF_N"))) == 0);
  CHECK_THROWS_AS(determinant_of_jones(poly("1+t^(1/2)")), InvariantViolation);
}

TEST_CASE("fixture tags") {
  for (const auto& f : builtin_fixtures()) {
    CAPTURE(f.name);
    REQUIRE(f.expected_jones);
    REQUIRE(f.expected_det);
    CHECK(jones(f.diagram) == *f.expected_jones);
    CHECK(determinant(f.diagram) == *f.expected_det);
  }
}

TEST_CASE("jones of a split union") {
  const HalfLaurent circle = poly("-t^(-1/2)-t^(1/2)");
  std::mt19937_64 rng(qal::testing::test_seed() + 4);
  for (int k = 0; k < 40; ++k) {
    const Diagram a = qal::testing::random_braid_diagram(rng, 6);
    const Diagram b = qal::testing::random_braid_diagram(rng, 6);
    CHECK(jones(disjoint_union(a, b)) == circle * jones(a) * jones(b));
  }
  CHECK(jones(disjoint_union(fx("TREF_L"), Diagram::unknot())) == circle * jones(fx("TREF_L")));
}

TEST_CASE("exponent parity follows the component count") {
  auto check = [](const Diagram& d) {
    const bool odd_components = d.component_count() % 2 == 1;
    const HalfLaurent v = jones(d);
    for (const auto& [k, c] : v.terms()) CHECK((k % 2 == 0) == odd_components);
  };
  for (const auto& f : builtin_fixtures()) check(f.diagram);
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 5, 50, 10)) check(r.diagram);
}

TEST_CASE("jones is invariant under relabeling and double mirror") {
  std::mt19937_64 rng(qal::testing::test_seed() + 6);
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 7, 100, 10)) {
    const HalfLaurent v = jones(r.diagram);
    CHECK(jones(parse_pd(qal::testing::relabeled_pd(r.diagram, rng))) == v);
    CHECK(jones(mirror(mirror(r.diagram))) == v);
  }
}

TEST_CASE("skein identity at every crossing") {
  for (const auto& f : builtin_fixtures()) {
    for (int i = 0; i < f.diagram.crossing_count(); ++i) {
      const SkeinReport r = skein_check(f.diagram, i);
      CAPTURE(f.name);
      CAPTURE(i);
      CHECK(r.holds);
    }
  }
  int negative = 0, positive = 0;
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 8, 100, 10)) {
    for (int i = 0; i < r.diagram.crossing_count(); ++i) {
      const SkeinReport s = skein_check(r.diagram, i);
      (s.sign > 0 ? positive : negative)++;
      CAPTURE(to_pd(r.diagram));
      CHECK(s.holds);
    }
  }
  CHECK(positive > 0);
  CHECK(negative > 0);
}

TEST_CASE("skein_check reports, never throws, on a wrong right-hand side") {
  // The negative-crossing formula as printed, with V0 and V1 weights swapped,
  // does not hold on the negative Hopf link.
  const SkeinReport r = skein_check(fx("HOPF_N"), 0);
  REQUIRE(r.sign == -1);
  const HalfLaurent printed = mono_mul(r.jones_zero, -1, 3 * r.e - 2) + mono_mul(r.jones_one, -1, -1);
  CHECK(printed != r.jones);
  CHECK(r.holds);
}

TEST_CASE("determinant matches the alternating sum and the Goeritz oracle") {
  for (const auto& f : builtin_fixtures()) {
    CAPTURE(f.name);
    CHECK(determinant(f.diagram) == qal::testing::goeritz_determinant(f.diagram));
  }
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 9, 100, 10)) {
    if (connected_pieces(r.diagram) != 1) continue;
    CAPTURE(to_pd(r.diagram));
    CHECK(determinant(r.diagram) == qal::testing::goeritz_determinant(r.diagram));
  }
}

TEST_CASE("resource caps") {
  Limits small;
  small.statesum_max_crossings = 4;
  small.skein_max_crossings = 4;
  CHECK_THROWS_AS(bracket_statesum(fx("K5_2"), small), ResourceError);
  CHECK_THROWS_AS(bracket_skein(fx("K5_2"), small), ResourceError);
  CHECK_NOTHROW(bracket_skein(fx("FIG8"), small));

  ::setenv("QAL_MAX_CROSSINGS", "3", 1);
  const Limits env = Limits::from_env();
  ::unsetenv("QAL_MAX_CROSSINGS");
  CHECK(env.statesum_max_crossings == 3);
  CHECK(env.skein_max_crossings == 3);
  CHECK(Limits::from_env().skein_max_crossings == 24);
}
