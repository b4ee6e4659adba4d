#pragma once

// Twist families, per-determinant Jones classes over a corpus, and the
// degree-bound audit used in the finiteness argument.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qal/corpus.hpp"
#include "qal/diagram.hpp"
#include "qal/laurent.hpp"
#include "qal/obstructions.hpp"
#include "qal/qa.hpp"

namespace qal {

/// L^1..L^N, L^n = replace_crossing_with_tangle(d, i, n, axis).
std::vector<Diagram> twist_family(const Diagram& d, int i, int n_max, TwistAxis axis = TwistAxis::parallel);

/// A parallel twist keeps L1 as the turn-back tangle, an antiparallel one
/// keeps L0; the determinant is constant along the family exactly when the
/// turn-back smoothing has determinant 0. Picks the axis that makes that
/// happen, parallel when neither (or both) does.
TwistAxis constant_det_axis(std::int64_t det_zero, std::int64_t det_one);

struct TwistAudit {
  int crossing = 0;
  int n_max = 0;
  int sign = 0;
  TwistAxis axis = TwistAxis::parallel;
  std::int64_t det = 0;
  std::int64_t det_zero = 0;
  std::int64_t det_one = 0;
  bool smoothing_jones_nonzero = false;
  bool hypothesis = false;  // (det L0 = 0 or det L1 = 0) and both V nonzero

  std::vector<std::int64_t> dets;  // index n-1
  std::vector<HalfLaurent> jones;  // index n-1
  bool det_constant = false;
  bool jones_distinct = false;
  std::vector<std::pair<int, int>> repeated;  // (n, n') with equal Jones
};

TwistAudit twist_family_audit(const Diagram& d, int i, int n_max, std::optional<TwistAxis> axis = std::nullopt);

/// Deterministic twist-generated corpus: for n = 2, 3, ... and each base entry
/// with crossings, each crossing i in order, the entry "<name>~c<i>n<n>" =
/// replace_crossing_with_tangle(base, i, n, axis). Stops after `count`.
std::vector<NamedDiagram> twist_extensions(const std::vector<NamedDiagram>& base, int count,
                                           TwistAxis axis = TwistAxis::parallel);

struct DegreeAudit {
  int crossing = 0;
  int sign = 0;
  int e = 0;
  int m_twice = 0;
  int M_twice = 0;
  int min_twice = 0;
  int max_twice = 0;
  int offset_twice = 0;  // |3e + 2|
  bool lower_ok = false;
  bool upper_ok = false;
  // Same inequalities with |3e - 2| at negative crossings, kept for reference.
  int literal_offset_twice = 0;
  bool literal_ok = false;

  bool passed() const noexcept { return lower_ok && upper_ok; }
};

/// Throws std::out_of_range for a bad index and std::invalid_argument when
/// [m, M] does not contain the degree range of both smoothings.
DegreeAudit degree_bound_audit(const Diagram& d, int i, int m_twice, int M_twice);

/// Audit at the root crossing of a branch certificate, with m and M taken
/// from the Jones values of its two children. Throws std::invalid_argument
/// on a leaf.
DegreeAudit root_degree_audit(const Certificate& cert);

struct ClassValue {
  HalfLaurent jones;
  std::vector<std::string> members;  // sorted
  ObstructionRecord audit;
};

struct ClassReport {
  std::int64_t determinant = 0;
  std::vector<ClassValue> values;  // observed values only, sorted
  int m_twice = 0;
  int M_twice = 0;

  bool audits_passed() const;
};

struct UncertifiedEntry {
  std::string name;
  CertifyStatus status;
};

struct RootAudit {
  std::string name;
  DegreeAudit audit;
};

struct Enumeration {
  std::vector<ClassReport> classes;  // ascending determinant
  std::vector<UncertifiedEntry> uncertified;
  std::vector<RootAudit> root_audits;  // certified non-leaf entries
};

/// Certifies every entry (in parallel if asked; results are identical) and
/// groups the certified ones by determinant.
Enumeration enumerate_classes(const std::vector<NamedDiagram>& corpus, const SearchBudget& budget = {},
                              bool parallel = false);

}  // namespace qal
