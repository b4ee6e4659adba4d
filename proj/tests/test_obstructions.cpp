#include <doctest.h>

#include "qal/invariants.hpp"
#include "qal/obstructions.hpp"
#include "qal/qa.hpp"
#include "support/fixtures.hpp"
#include "support/random_diagrams.hpp"

using namespace qal;
using qal::testing::poly;

TEST_CASE("check_alternating examples") {
  CHECK(check_alternating(poly("-t^(-4)+t^(-3)+t^(-1)")));
  CHECK(check_alternating(poly("1")));
  CHECK_FALSE(check_alternating(poly("t+t^(2)")));
  CHECK(check_alternating(poly("t+t^(3)")));  // interior zeros satisfy the inequality
  CHECK_THROWS_WITH_AS(check_alternating(HalfLaurent()), "undefined degree", std::domain_error);
  CHECK_THROWS_AS(check_alternating(poly("t+t^(3/2)")), std::domain_error);
}

TEST_CASE("check_coeff_bound examples") {
  CHECK(check_coeff_bound(poly("-t^(-1/2)-t^(-5/2)"), 2));
  CHECK(check_coeff_bound(poly("-t^(-6)+t^(-5)-t^(-4)+2t^(-3)-t^(-2)+t^(-1)"), 7));
  CHECK_FALSE(check_coeff_bound(poly("3t"), 2));
}

TEST_CASE("check_det_consistency examples") {
  auto check = [](const char* v, int alt, int ev, bool ok) {
    const DetConsistency c = check_det_consistency(poly(v));
    CHECK(c.alt_sum_abs == alt);
    CHECK(c.eval_abs == ev);
    CHECK(c.consistent == ok);
  };
  check("t^(-2)-t^(-1)+1-t+t^(2)", 5, 5, true);
  check("1", 1, 1, true);
  check("-t^(-4)+t^(-3)+t^(-1)", 3, 3, true);
  check("-t^(-1/2)-t^(-5/2)", 2, 2, true);
  CHECK_THROWS_AS(check_det_consistency(HalfLaurent()), std::domain_error);
}

TEST_CASE("breadth_report examples") {
  BreadthReport b = breadth_report(poly("1"), 1);
  CHECK(b.breadth_text() == "0");
  CHECK(b.within_conjecture);
  b = breadth_report(poly("-t^(-1/2)-t^(-5/2)"), 2);
  CHECK(b.breadth_text() == "2");
  CHECK(b.within_conjecture);
  b = breadth_report(poly("t^(-2)-t^(-1)+1-t+t^(2)"), 5);
  CHECK(b.breadth_text() == "4");
  CHECK(b.within_conjecture);
  b = breadth_report(poly("t^(-1/2)+t^(3)"), 1);
  CHECK(b.breadth_text() == "7/2");
  CHECK_FALSE(b.within_conjecture);
}

TEST_CASE("fixture values pass every check") {
  for (const auto& f : builtin_fixtures()) {
    CAPTURE(f.name);
    const ObstructionRecord r = audit_jones(*f.expected_jones, *f.expected_det);
    CHECK(r.passed());
    CHECK(r.breadth.within_conjecture);
  }
}

TEST_CASE("determinant consistency holds for arbitrary diagrams") {
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 20, 150, 10)) {
    const HalfLaurent v = jones(r.diagram);
    const DetConsistency c = check_det_consistency(v);
    CAPTURE(to_pd(r.diagram));
    CHECK(c.consistent);
    CHECK(c.eval_abs == determinant(r.diagram));
  }
}

TEST_CASE("certified random diagrams pass the coefficient obstructions") {
  Certifier certifier;
  int certified = 0;
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 21, 120, 9)) {
    if (certifier.certify(r.diagram).status != CertifyStatus::certified) continue;
    ++certified;
    const ObstructionRecord rec = audit_jones(jones(r.diagram), determinant(r.diagram));
    CAPTURE(to_pd(r.diagram));
    CHECK(rec.passed());
  }
  CHECK(certified > 10);
}
