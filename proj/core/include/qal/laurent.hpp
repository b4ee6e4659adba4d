#pragma once

// Exact Laurent polynomials in a single variable with half-integer exponents.
//
// A term a * t^(k/2) is stored under the key k ("twice exponent"), so the
// Kauffman bracket (integer powers of A, stored as 2 * power) and the Jones
// polynomial (powers of t^(1/2)) share one representation. Coefficients are
// GMP integers; the zero polynomial is the empty term map.

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace qal {

class HalfLaurent {
 public:
  using TermMap = std::map<int, mpz_class>;

  HalfLaurent() = default;

  static HalfLaurent constant(const mpz_class& c);
  static HalfLaurent monomial(const mpz_class& coeff, int twice_exponent);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of t^(twice_exponent / 2); zero when absent.
  mpz_class coefficient(int twice_exponent) const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const HalfLaurent& other);

  /// Adds coeff * t^(twice_exponent / 2) in place.
  void add_term(int twice_exponent, const mpz_class& coeff);

  friend HalfLaurent operator+(HalfLaurent lhs, const HalfLaurent& rhs) { return lhs += rhs; }
  friend HalfLaurent operator-(HalfLaurent lhs, const HalfLaurent& rhs) { return lhs -= rhs; }
  friend HalfLaurent operator*(const HalfLaurent& lhs, const HalfLaurent& rhs);
  friend HalfLaurent operator-(HalfLaurent p);
  friend bool operator==(const HalfLaurent& lhs, const HalfLaurent& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const HalfLaurent& lhs, const HalfLaurent& rhs) { return !(lhs == rhs); }
  friend bool operator<(const HalfLaurent& lhs, const HalfLaurent& rhs);

 private:
  TermMap terms_;
};

/// Gaussian integer re + im * i with exact coefficients.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const GaussInt& z);

struct DegreeStats {
  int min_twice;
  int max_twice;
  int breadth_twice;
};

HalfLaurent poly_add(const HalfLaurent& p, const HalfLaurent& q);
HalfLaurent poly_mul(const HalfLaurent& p, const HalfLaurent& q);

/// sign * t^(twice_exponent / 2) * p. sign must be +1 or -1.
HalfLaurent mono_mul(const HalfLaurent& p, int sign, int twice_exponent);

/// p^k for k >= 0.
HalfLaurent power(const HalfLaurent& p, unsigned k);

/// Substitutes t^(1/2) = i, i.e. t = -1.
GaussInt evaluate_at_i(const HalfLaurent& p);

/// Throws std::domain_error("undefined degree") for the zero polynomial.
DegreeStats degree_stats(const HalfLaurent& p);

/// p(t) -> p(1/t).
HalfLaurent invert_variable(const HalfLaurent& p);

/// Canonical text form: ascending exponents, e.g. "-t^(-5/2)-t^(-1/2)".
std::string to_string(const HalfLaurent& p, char variable = 't');

/// Inverse of to_string. Also accepts spaces, '*' and bare exponents ("t^2").
/// Throws std::invalid_argument with the offending column.
HalfLaurent parse_laurent(std::string_view text, char variable = 't');

}  // namespace qal
