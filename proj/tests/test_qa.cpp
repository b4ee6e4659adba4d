#include <doctest.h>

#include "qal/qa.hpp"
#include "qal/report.hpp"
#include "support/fixtures.hpp"
#include "support/random_diagrams.hpp"

using namespace qal;
using qal::testing::fx;

namespace {

void check_branches(const Certificate& c) {
  if (c.is_leaf()) {
    CHECK(c.diagram.is_unknot_diagram());
    return;
  }
  const auto& b = *c.branch;
  CHECK(b.det_zero >= 1);
  CHECK(b.det_one >= 1);
  CHECK(b.det == b.det_zero + b.det_one);
  for (const auto& child : b.children) check_branches(child);
}

}  // namespace

TEST_CASE("certify examples") {
  const CertifyResult u = certify(Diagram::unknot());
  REQUIRE(u.status == CertifyStatus::certified);
  CHECK(u.certificate->is_leaf());

  const CertifyResult h = certify(fx("HOPF_N"));
  REQUIRE(h.status == CertifyStatus::certified);
  const auto& b = *h.certificate->branch;
  CHECK(b.det == 2);
  CHECK(b.det_zero == 1);
  CHECK(b.det_one == 1);
  CHECK(b.children[0].is_leaf());
  CHECK(b.children[1].is_leaf());

  CHECK(certify(Diagram::unlink(2)).status == CertifyStatus::not_certified);
  CHECK(certify(disjoint_union(fx("TREF_L"), fx("HOPF_N"))).status == CertifyStatus::not_certified);
}

TEST_CASE("the quasi-alternating fixtures certify and verify") {
  for (const char* name : {"UNKNOT", "HOPF_N", "HOPF_P", "TREF_L", "T2_4", "FIG8", "K5_1", "T2_6", "K5_2", "K7_1"}) {
    CAPTURE(name);
    const CertifyResult r = certify(fx(name));
    REQUIRE(r.status == CertifyStatus::certified);
    const VerifyResult v = verify_certificate(*r.certificate);
    CHECK(v.valid());
    check_branches(*r.certificate);
  }
}

TEST_CASE("verify_certificate catches tampering") {
  const CertifyResult r = certify(fx("TREF_L"));
  REQUIRE(r.certificate);

  Certificate bad_sum = *r.certificate;
  bad_sum.branch->det = 3;
  bad_sum.branch->det_zero = 1;
  bad_sum.branch->det_one = 1;
  VerifyResult v = verify_certificate(bad_sum);
  CHECK_FALSE(v.valid());
  bool found = false;
  for (const auto& msg : v.violations) found = found || msg.find("det sum 3 != 1+1") != std::string::npos;
  CHECK(found);

  Certificate bad_leaf = *r.certificate;
  Certificate* node = &bad_leaf;
  while (!node->is_leaf()) node = &node->branch->children[0];
  node->diagram = parse_pd("X[1,1,2,2]");
  v = verify_certificate(bad_leaf);
  found = false;
  for (const auto& msg : v.violations) found = found || msg.find("leaf not a 0-crossing unknot") != std::string::npos;
  CHECK(found);

  Certificate bad_child = *r.certificate;
  std::swap(bad_child.branch->children[0], bad_child.branch->children[1]);
  CHECK_FALSE(verify_certificate(bad_child).valid());

  Certificate bad_index = *r.certificate;
  bad_index.branch->crossing = 9;
  CHECK_FALSE(verify_certificate(bad_index).valid());
}

TEST_CASE("budgets") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  CHECK(certify(fx("K7_1"), tiny).status == CertifyStatus::budget_exceeded);
  SearchBudget shallow;
  shallow.max_depth = 1;
  CHECK(certify(fx("K7_1"), shallow).status == CertifyStatus::budget_exceeded);
  SearchBudget invalid;
  invalid.max_nodes = 0;
  CHECK_THROWS_AS(certify(fx("TREF_L"), invalid), std::invalid_argument);
}

TEST_CASE("certify is deterministic and memo-independent") {
  for (const auto& r : qal::testing::random_corpus(qal::testing::test_seed() + 30, 80, 9)) {
    Certifier with_memo(SearchBudget{}, Limits{}, true);
    Certifier without_memo(SearchBudget{}, Limits{}, false);
    const CertifyResult a = with_memo.certify(r.diagram);
    const CertifyResult a2 = with_memo.certify(r.diagram);
    const CertifyResult b = without_memo.certify(r.diagram);
    CAPTURE(to_pd(r.diagram));
    CHECK(a.status == b.status);
    CHECK(a.status == a2.status);
    if (a.certificate && b.certificate) {
      CHECK(nlohmann::json(*a.certificate) == nlohmann::json(*b.certificate));
      CHECK(nlohmann::json(*a.certificate) == nlohmann::json(*a2.certificate));
      CHECK(verify_certificate(*a.certificate).valid());
    }
  }
}

TEST_CASE("certificate JSON shape") {
  const nlohmann::json j = *certify(fx("HOPF_N")).certificate;
  CHECK(j["kind"] == "branch");
  CHECK(j["det"] == nlohmann::json::array({2, 1, 1}));
  CHECK(j["children"].size() == 2);
  CHECK(j["children"][0]["kind"] == "leaf");
  CHECK(j["children"][0]["pd"] == "PD[]; circles=1");
}
