#pragma once

// Quasi-alternating certificates: depth-first search over crossings and an
// independent verifier that recomputes everything from scratch.
//
// The search is one-sided. NotCertified only means this particular diagram
// admits no certificate under the search rules; it says nothing about other
// diagrams of the same link.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qal/diagram.hpp"
#include "qal/invariants.hpp"

namespace qal {

struct SearchBudget {
  std::int64_t max_nodes = 100000;
  int max_depth = 64;

  /// Throws std::invalid_argument unless both limits are >= 1.
  void validate() const;
};

struct Certificate {
  struct Branch {
    int crossing = 0;
    std::int64_t det = 0;
    std::int64_t det_zero = 0;
    std::int64_t det_one = 0;
    std::vector<Certificate> children;  // [L0, L1], both simplified
  };

  Diagram diagram;
  std::optional<Branch> branch;  // empty: leaf

  bool is_leaf() const noexcept { return !branch.has_value(); }
  /// Number of nodes in the tree.
  std::size_t size() const;
  std::size_t depth() const;
};

enum class CertifyStatus { certified, not_certified, budget_exceeded };

const char* to_string(CertifyStatus s);

struct CertifyResult {
  CertifyStatus status = CertifyStatus::not_certified;
  std::optional<Certificate> certificate;
  std::int64_t nodes_visited = 0;
};

/// Reusable search context. Memo tables persist across certify() calls on the
/// same object; outcomes do not depend on them.
class Certifier {
 public:
  explicit Certifier(SearchBudget budget = {}, Limits limits = Limits::from_env(), bool memoize = true);

  CertifyResult certify(const Diagram& d);

 private:
  enum class Outcome { ok, fail, budget };

  Outcome search(const Diagram& d, int depth, Certificate& out);
  std::int64_t det_of(const Diagram& d, const std::string& key);

  SearchBudget budget_;
  Limits limits_;
  bool memoize_;
  std::int64_t nodes_ = 0;
  BracketCache brackets_;
  std::unordered_map<std::string, std::int64_t> dets_;
  std::unordered_map<std::string, std::optional<Certificate>> memo_;  // nullopt: exhausted
};

CertifyResult certify(const Diagram& d, const SearchBudget& budget = {});

struct VerifyResult {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Recomputes every determinant and re-derives every child from its parent.
VerifyResult verify_certificate(const Certificate& cert, const Limits& limits = Limits::from_env());

}  // namespace qal
