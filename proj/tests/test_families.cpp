#include <doctest.h>

#include "qal/families.hpp"
#include "qal/invariants.hpp"
#include "qal/report.hpp"
#include "support/fixtures.hpp"

using namespace qal;
using qal::testing::fx;
using qal::testing::poly;

TEST_CASE("twist_family examples") {
  const auto fam = twist_family(fx("HOPF_N"), 0, 3);
  REQUIRE(fam.size() == 3);
  CHECK(fam[0].crossing_count() == 2);
  CHECK(fam[1].crossing_count() == 3);
  CHECK(fam[2].crossing_count() == 4);
  CHECK(jones(fam[0]) == jones(fx("HOPF_N")));
  CHECK_THROWS_AS(twist_family(fx("HOPF_N"), 2, 3), std::out_of_range);
}

TEST_CASE("parallel twists keep L1 as the turn-back, antiparallel twists keep L0") {
  const TwistAudit p = twist_family_audit(fx("TREF_L"), 0, 5, TwistAxis::parallel);
  const TwistAudit a = twist_family_audit(fx("TREF_L"), 0, 5, TwistAxis::antiparallel);
  for (int n = 1; n <= 5; ++n) {
    CHECK(p.dets[n - 1] == p.det_zero + n * p.det_one);
    CHECK(a.dets[n - 1] == a.det_one + n * a.det_zero);
  }
  CHECK_FALSE(p.hypothesis);
  CHECK_FALSE(p.det_constant);
}

TEST_CASE("twist audit on fixtures satisfying the hypothesis") {
  const TwistAudit l1 = twist_family_audit(fx("TWIST_L1"), 0, 5);
  CHECK(l1.det_one == 0);
  CHECK(l1.hypothesis);
  CHECK(l1.axis == TwistAxis::parallel);
  CHECK(l1.det_constant);
  CHECK(l1.jones_distinct);

  const TwistAudit l0 = twist_family_audit(fx("TWIST_L0"), 6, 5);
  CHECK(l0.det_zero == 0);
  CHECK(l0.hypothesis);
  CHECK(l0.axis == TwistAxis::antiparallel);
  CHECK(l0.det_constant);
  CHECK(l0.jones_distinct);
}

TEST_CASE("twist audit edge cases") {
  const TwistAudit one = twist_family_audit(fx("FIG8"), 1, 1);
  CHECK(one.jones_distinct);
  CHECK(one.det_constant);

  const TwistAudit off = twist_family_audit(fx("FIG8"), 0, 4);
  CHECK_FALSE(off.hypothesis);
  CHECK(off.det_zero > 0);
  CHECK(off.det_one > 0);
  CHECK(off.dets.size() == 4);

  // A 7-crossing Hopf diagram: the hypothesis holds but the twisted crossing
  // only adds kinks, so the Jones values repeat. The audit reports it.
  const Diagram hopf7 = parse_pd("X[5,10,6,11] X[1,11,2,12] X[2,6,3,7] X[7,13,8,12] X[13,9,14,8] X[3,10,4,9] X[14,4,5,1]");
  const TwistAudit rep = twist_family_audit(hopf7, 3, 4);
  CHECK(rep.hypothesis);
  CHECK(rep.det_constant);
  CHECK_FALSE(rep.jones_distinct);
  CHECK_FALSE(rep.repeated.empty());
}

TEST_CASE("degree_bound_audit examples") {
  for (const char* name : {"TREF_L", "HOPF_N", "FIG8", "K5_2", "T2_4"}) {
    const Diagram& d = fx(name);
    for (int i = 0; i < d.crossing_count(); ++i) {
      const SmoothingOutcome s = smooth(d, i);
      const DegreeStats s0 = degree_stats(jones(s.zero_smoothing));
      const DegreeStats s1 = degree_stats(jones(s.one_smoothing));
      const DegreeAudit a = degree_bound_audit(d, i, std::min(s0.min_twice, s1.min_twice),
                                               std::max(s0.max_twice, s1.max_twice));
      CAPTURE(name);
      CAPTURE(i);
      CHECK(a.passed());
      CHECK(a.offset_twice == std::abs(3 * a.e + 2));
    }
  }
  CHECK_THROWS_AS(degree_bound_audit(fx("TREF_L"), 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(degree_bound_audit(fx("TREF_L"), 3, -100, 100), std::out_of_range);
}

TEST_CASE("enumerate_classes examples") {
  CHECK(enumerate_classes({}).classes.empty());

  const Enumeration u = enumerate_classes({fixture("UNKNOT")});
  REQUIRE(u.classes.size() == 1);
  CHECK(u.classes[0].determinant == 1);
  REQUIRE(u.classes[0].values.size() == 1);
  CHECK(u.classes[0].values[0].jones == HalfLaurent::constant(1));

  const Enumeration all = enumerate_classes(builtin_fixtures());
  for (const auto& c : all.classes) {
    if (c.determinant == 2) {
      // HOPF_P is the mirror image of HOPF_N.
      for (const auto& v : c.values) {
        const bool hopf = v.jones == poly("-t^(-1/2)-t^(-5/2)") || invert_variable(v.jones) == poly("-t^(-1/2)-t^(-5/2)");
        CHECK(hopf);
      }
    }
    if (c.determinant == 3) {
      REQUIRE(c.values.size() == 1);
      CHECK(c.values[0].jones == poly("-t^(-4)+t^(-3)+t^(-1)"));
    }
    CHECK(c.audits_passed());
  }
  for (const auto& a : all.root_audits) CHECK(a.audit.passed());
}

TEST_CASE("enumerate_classes is identical in parallel") {
  auto corpus = builtin_fixtures();
  const auto extra = twist_extensions(corpus, 20);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  CHECK(nlohmann::json(enumerate_classes(corpus, {}, false)) == nlohmann::json(enumerate_classes(corpus, {}, true)));
}

TEST_CASE("class report JSON uses observed_values") {
  const nlohmann::json j = enumerate_classes({fixture("TREF_L")});
  CHECK(j["classes"][0].contains("observed_values"));
  CHECK_FALSE(j["classes"][0].contains("all_values"));
  CHECK(j["classes"][0]["determinant"] == 3);
}

TEST_CASE("twist_extensions") {
  const auto ext = twist_extensions(builtin_fixtures(), 50);
  CHECK(ext.size() == 50);
  CHECK(ext.front().name == "HOPF_N~c0n2");
  CHECK(twist_extensions({fixture("UNKNOT")}, 5).empty());
}
