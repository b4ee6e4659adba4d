#include "qal/obstructions.hpp"

#include <stdexcept>

namespace qal {

std::vector<mpz_class> lattice_coefficients(const HalfLaurent& v) {
  const DegreeStats deg = degree_stats(v);  // throws on zero
  for (const auto& [k, c] : v.terms()) {
    if ((k - deg.min_twice) % 2 != 0) throw std::domain_error("not lattice-supported: " + to_string(v));
  }
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(deg.breadth_twice / 2 + 1));
  for (const auto& [k, c] : v.terms()) coeffs[static_cast<std::size_t>((k - deg.min_twice) / 2)] = c;
  return coeffs;
}

bool check_alternating(const HalfLaurent& v) {
  const auto coeffs = lattice_coefficients(v);
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) * sgn(coeffs[i + 1]) > 0) return false;
  }
  return true;
}

bool check_coeff_bound(const HalfLaurent& v, std::int64_t det) {
  const mpz_class bound(std::to_string(det));
  for (const auto& [k, c] : v.terms()) {
    if (abs(c) > bound) return false;
  }
  return true;
}

DetConsistency check_det_consistency(const HalfLaurent& v) {
  const auto coeffs = lattice_coefficients(v);
  mpz_class alt = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) alt += (i % 2 == 0) ? coeffs[i] : mpz_class(-coeffs[i]);

  DetConsistency out;
  out.alt_sum_abs = abs(alt);
  const GaussInt z = evaluate_at_i(v);
  // V(-1) is a unit times an integer whenever the support is on one lattice.
  out.eval_abs = (z.re == 0) ? mpz_class(abs(z.im)) : mpz_class(abs(z.re));
  out.consistent = (z.re == 0 || z.im == 0) && out.alt_sum_abs == out.eval_abs;
  return out;
}

std::string BreadthReport::breadth_text() const {
  if (breadth_twice % 2 == 0) return std::to_string(breadth_twice / 2);
  return std::to_string(breadth_twice) + "/2";
}

BreadthReport breadth_report(const HalfLaurent& v, std::int64_t det) {
  BreadthReport r;
  r.breadth_twice = degree_stats(v).breadth_twice;
  r.det = det;
  r.within_conjecture = r.breadth_twice <= 2 * det;
  return r;
}

ObstructionRecord audit_jones(const HalfLaurent& v, std::int64_t det) {
  ObstructionRecord r;
  r.jones = v;
  r.det = det;
  r.alternating = check_alternating(v);
  r.coeff_bound = check_coeff_bound(v, det);
  r.det_consistency = check_det_consistency(v);
  r.breadth = breadth_report(v, det);
  return r;
}

}  // namespace qal
