#include "qal/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace qal {

HalfLaurent HalfLaurent::constant(const mpz_class& c) { return monomial(c, 0); }

HalfLaurent HalfLaurent::monomial(const mpz_class& coeff, int twice_exponent) {
  HalfLaurent p;
  p.add_term(twice_exponent, coeff);
  return p;
}

mpz_class HalfLaurent::coefficient(int twice_exponent) const {
  auto it = terms_.find(twice_exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void HalfLaurent::add_term(int twice_exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(twice_exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) {
  *this = *this * other;
  return *this;
}

HalfLaurent operator*(const HalfLaurent& lhs, const HalfLaurent& rhs) {
  HalfLaurent out;
  for (const auto& [i, a] : lhs.terms_) {
    for (const auto& [j, b] : rhs.terms_) out.add_term(i + j, a * b);
  }
  return out;
}

HalfLaurent operator-(HalfLaurent p) {
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

bool operator<(const HalfLaurent& lhs, const HalfLaurent& rhs) { return lhs.terms_ < rhs.terms_; }

HalfLaurent poly_add(const HalfLaurent& p, const HalfLaurent& q) { return p + q; }

HalfLaurent poly_mul(const HalfLaurent& p, const HalfLaurent& q) { return p * q; }

HalfLaurent mono_mul(const HalfLaurent& p, int sign, int twice_exponent) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("mono_mul: sign must be +1 or -1");
  HalfLaurent out;
  for (const auto& [k, c] : p.terms()) out.add_term(k + twice_exponent, sign > 0 ? c : mpz_class(-c));
  return out;
}

HalfLaurent power(const HalfLaurent& p, unsigned k) {
  HalfLaurent result = HalfLaurent::constant(1);
  HalfLaurent base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

GaussInt evaluate_at_i(const HalfLaurent& p) {
  GaussInt z{0, 0};
  for (const auto& [k, c] : p.terms()) {
    // i^k for any integer k, using i^4 = 1.
    switch (((k % 4) + 4) % 4) {
      case 0: z.re += c; break;
      case 1: z.im += c; break;
      case 2: z.re -= c; break;
      case 3: z.im -= c; break;
    }
  }
  return z;
}

DegreeStats degree_stats(const HalfLaurent& p) {
  if (p.is_zero()) throw std::domain_error("undefined degree");
  const int lo = p.terms().begin()->first;
  const int hi = p.terms().rbegin()->first;
  return {lo, hi, hi - lo};
}

HalfLaurent invert_variable(const HalfLaurent& p) {
  HalfLaurent out;
  for (const auto& [k, c] : p.terms()) out.add_term(-k, c);
  return out;
}

std::string to_string(const GaussInt& z) {
  std::string out = z.re.get_str();
  out += z.im < 0 ? "-" : "+";
  out += mpz_class(abs(z.im)).get_str();
  out += "i";
  return out;
}

namespace {

std::string exponent_text(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string to_string(const HalfLaurent& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const mpz_class mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += variable;
    if (k != 2) {
      out += "^(";
      out += exponent_text(k);
      out += ')';
    }
  }
  return out;
}

namespace {

class LaurentReader {
 public:
  LaurentReader(std::string_view text, char variable) : text_(text), var_(variable) {}

  HalfLaurent read() {
    HalfLaurent out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return out;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      read_term(out, sign);
    }
    return out;
  }

 private:
  void read_term(HalfLaurent& out, int sign) {
    mpz_class coeff = 1;
    bool have_digits = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(read_digits());
      have_digits = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    int twice = 0;
    if (!at_end() && peek() == var_) {
      ++pos_;
      twice = 2;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        twice = read_exponent();
      }
    } else if (!have_digits) {
      fail("expected coefficient or variable");
    }
    out.add_term(twice, sign * coeff);
  }

  int read_exponent() {
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
      skip_space();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    int numer = std::stoi(read_digits());
    int twice = 2 * numer;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || read_digits() != "2") fail("only denominators of 2 are allowed");
      twice = numer;
    }
    skip_space();
    if (paren) {
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * twice;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

HalfLaurent parse_laurent(std::string_view text, char variable) { return LaurentReader(text, variable).read(); }

}  // namespace qal
