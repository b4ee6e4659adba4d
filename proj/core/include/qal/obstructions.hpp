#pragma once

// Coefficient-level tests a quasi-alternating Jones polynomial must pass,
// plus the (conjectural) breadth-versus-determinant report.
//
// "Lattice" means: all exponents share one parity of twice_exponent, so after
// factoring out the lowest power the support sits on a step-1 lattice. The
// coefficient vector a_0..a_n includes interior zeros.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qal/laurent.hpp"

namespace qal {

/// a_0..a_n with V = t^m * sum a_i t^i. Throws std::domain_error for the
/// zero polynomial ("undefined degree") or mixed-parity support
/// ("not lattice-supported").
std::vector<mpz_class> lattice_coefficients(const HalfLaurent& v);

bool check_alternating(const HalfLaurent& v);
bool check_coeff_bound(const HalfLaurent& v, std::int64_t det);

struct DetConsistency {
  mpz_class alt_sum_abs;
  mpz_class eval_abs;
  bool consistent = false;
};

DetConsistency check_det_consistency(const HalfLaurent& v);

struct BreadthReport {
  int breadth_twice = 0;  // breadth in units of 1/2
  std::int64_t det = 0;
  bool within_conjecture = false;

  /// "2", "9/2", ...
  std::string breadth_text() const;
};

BreadthReport breadth_report(const HalfLaurent& v, std::int64_t det);

/// Everything above for one Jones value. breadth is informational and does
/// not enter passed().
struct ObstructionRecord {
  HalfLaurent jones;
  std::int64_t det = 0;
  bool alternating = false;
  bool coeff_bound = false;
  DetConsistency det_consistency;
  BreadthReport breadth;

  bool passed() const noexcept { return alternating && coeff_bound && det_consistency.consistent; }
};

ObstructionRecord audit_jones(const HalfLaurent& v, std::int64_t det);

}  // namespace qal
