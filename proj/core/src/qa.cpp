#include "qal/qa.hpp"

#include <algorithm>
#include <stdexcept>

namespace qal {

void SearchBudget::validate() const {
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
}

std::size_t Certificate::size() const {
  std::size_t n = 1;
  if (branch) {
    for (const auto& c : branch->children) n += c.size();
  }
  return n;
}

std::size_t Certificate::depth() const {
  std::size_t d = 0;
  if (branch) {
    for (const auto& c : branch->children) d = std::max(d, c.depth() + 1);
  }
  return d;
}

const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::certified:
      return "certified";
    case CertifyStatus::not_certified:
      return "not_certified_this_diagram";
    case CertifyStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

Certifier::Certifier(SearchBudget budget, Limits limits, bool memoize)
    : budget_(budget), limits_(limits), memoize_(memoize) {
  budget_.validate();
}

std::int64_t Certifier::det_of(const Diagram& d, const std::string& key) {
  if (auto it = dets_.find(key); it != dets_.end()) return it->second;
  const std::int64_t det = determinant(d, limits_, &brackets_);
  dets_.emplace(key, det);
  return det;
}

Certifier::Outcome Certifier::search(const Diagram& d, int depth, Certificate& out) {
  if (++nodes_ > budget_.max_nodes || depth > budget_.max_depth) return Outcome::budget;
  if (d.is_unknot_diagram()) {
    out = Certificate{d, std::nullopt};
    return Outcome::ok;
  }
  if (d.crossing_count() == 0) return Outcome::fail;

  // Crossing indices inside a certificate depend on the labeling, so the
  // search memo is keyed on the exact normalized diagram; determinants only
  // need the relabeling-invariant key.
  const std::string exact = to_pd(d) + "|" + std::to_string(d.free_circles());
  if (memoize_) {
    if (auto it = memo_.find(exact); it != memo_.end()) {
      if (!it->second) return Outcome::fail;
      out = *it->second;
      return Outcome::ok;
    }
  }

  const std::int64_t det = det_of(d, canonical_key(d));
  if (det >= 2) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const SmoothingOutcome sm = smooth(d, i);
      Diagram zero = simplify(sm.zero_smoothing);
      Diagram one = simplify(sm.one_smoothing);
      const std::int64_t d0 = det_of(zero, canonical_key(zero));
      const std::int64_t d1 = det_of(one, canonical_key(one));
      if (d0 < 1 || d1 < 1 || d0 + d1 != det) continue;

      Certificate c0, c1;
      const Outcome r0 = search(zero, depth + 1, c0);
      if (r0 == Outcome::budget) return r0;
      if (r0 == Outcome::fail) continue;
      const Outcome r1 = search(one, depth + 1, c1);
      if (r1 == Outcome::budget) return r1;
      if (r1 == Outcome::fail) continue;

      Certificate::Branch b{i, det, d0, d1, {}};
      b.children.push_back(std::move(c0));
      b.children.push_back(std::move(c1));
      out = Certificate{d, std::move(b)};
      if (memoize_) memo_.emplace(exact, out);
      return Outcome::ok;
    }
  }
  if (memoize_) memo_.emplace(exact, std::nullopt);
  return Outcome::fail;
}

CertifyResult Certifier::certify(const Diagram& d) {
  nodes_ = 0;
  CertifyResult result;
  Certificate cert;
  const Outcome o = search(simplify(d), 0, cert);
  result.nodes_visited = nodes_;
  switch (o) {
    case Outcome::ok:
      result.status = CertifyStatus::certified;
      result.certificate = std::move(cert);
      break;
    case Outcome::fail:
      result.status = CertifyStatus::not_certified;
      break;
    case Outcome::budget:
      result.status = CertifyStatus::budget_exceeded;
      break;
  }
  return result;
}

CertifyResult certify(const Diagram& d, const SearchBudget& budget) { return Certifier(budget).certify(d); }

namespace {

void verify_node(const Certificate& node, const std::string& path, const Limits& limits,
                 std::vector<std::string>& out) {
  auto report = [&](const std::string& msg) { out.push_back(path + ": " + msg); };

  if (node.is_leaf()) {
    if (!node.diagram.is_unknot_diagram()) report("leaf not a 0-crossing unknot");
    return;
  }
  const auto& b = *node.branch;
  if (b.det_zero < 1) report("det L0 = " + std::to_string(b.det_zero) + " < 1");
  if (b.det_one < 1) report("det L1 = " + std::to_string(b.det_one) + " < 1");
  if (b.det != b.det_zero + b.det_one) {
    report("det sum " + std::to_string(b.det) + " != " + std::to_string(b.det_zero) + "+" +
           std::to_string(b.det_one));
  }
  if (b.crossing < 0 || b.crossing >= node.diagram.crossing_count()) {
    report("crossing index " + std::to_string(b.crossing) + " out of range");
    return;
  }

  const std::int64_t det = determinant(node.diagram, limits);
  if (det != b.det) report("recorded det " + std::to_string(b.det) + ", recomputed " + std::to_string(det));

  const SmoothingOutcome sm = smooth(node.diagram, b.crossing);
  const Diagram expected[2] = {simplify(sm.zero_smoothing), simplify(sm.one_smoothing)};
  const std::int64_t recorded[2] = {b.det_zero, b.det_one};
  if (b.children.size() != 2) {
    report("branch has " + std::to_string(b.children.size()) + " children, expected 2");
    return;
  }
  for (int k = 0; k < 2; ++k) {
    const std::string tag = "L" + std::to_string(k);
    const std::int64_t dk = determinant(expected[k], limits);
    if (dk != recorded[k]) {
      report("recorded det " + tag + " " + std::to_string(recorded[k]) + ", recomputed " + std::to_string(dk));
    }
    if (canonical_key(b.children[k].diagram) != canonical_key(expected[k])) {
      report("child " + std::to_string(k) + " is not the simplified " + tag + " smoothing");
    }
    verify_node(b.children[k], path + "/" + std::to_string(k), limits, out);
  }
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert, const Limits& limits) {
  VerifyResult r;
  verify_node(cert, "root", limits, r.violations);
  return r;
}

}  // namespace qal
