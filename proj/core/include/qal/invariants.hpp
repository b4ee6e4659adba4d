#pragma once

// Kauffman bracket, Jones polynomial and determinant of a diagram.
//
// Two bracket algorithms are kept side by side: the full state sum is the
// reference, the memoized skein recursion is the fast path. Brackets are
// HalfLaurent values in A with twice_exponent = 2 * (power of A).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qal/diagram.hpp"
#include "qal/laurent.hpp"

namespace qal {

/// Raised when a computation would exceed the configured crossing cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails (a bug, never bad input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  int statesum_max_crossings = 16;
  int skein_max_crossings = 24;

  /// Defaults, with QAL_MAX_CROSSINGS (if set) overriding both caps.
  static Limits from_env();
};

/// Memo table for bracket_skein, keyed by canonical_key. Not thread-safe:
/// use one per call tree.
class BracketCache {
 public:
  const HalfLaurent* find(const std::string& key) const {
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  void insert(const std::string& key, const HalfLaurent& value) { table_.try_emplace(key, value); }
  std::size_t size() const noexcept { return table_.size(); }
  void clear() { table_.clear(); }

 private:
  std::unordered_map<std::string, HalfLaurent> table_;
};

enum class BracketMethod { statesum, skein };

/// -A^-2 - A^2
HalfLaurent loop_value();

HalfLaurent bracket_statesum(const Diagram& d, const Limits& limits = Limits::from_env());
HalfLaurent bracket_skein(const Diagram& d, const Limits& limits = Limits::from_env(), BracketCache* cache = nullptr);
HalfLaurent bracket(const Diagram& d, BracketMethod method = BracketMethod::skein,
                    const Limits& limits = Limits::from_env(), BracketCache* cache = nullptr);

/// (-A)^(-3w) <D> with t^(1/2) = A^-2. Throws InvariantViolation when an odd
/// power of A survives the normalization.
HalfLaurent jones_from_bracket(const HalfLaurent& bracket, int writhe);

HalfLaurent jones(const Diagram& d, BracketMethod method = BracketMethod::skein,
                  const Limits& limits = Limits::from_env(), BracketCache* cache = nullptr);

/// |V(-1)| read off the Gaussian-integer evaluation at t^(1/2) = i. Throws
/// InvariantViolation unless the value is a unit times an integer.
std::int64_t determinant_of_jones(const HalfLaurent& v);

std::int64_t determinant(const Diagram& d, const Limits& limits = Limits::from_env(), BracketCache* cache = nullptr);

/// Right-hand side of the oriented skein relation at a crossing of the given
/// sign, with L0 the orientation-compatible smoothing and L1 the re-oriented
/// one:
///   positive:  -t^(1/2)  V0 - t^(3e/2 + 1)  V1
///   negative:  -t^(-1/2) V0 - t^(-3e/2 - 1) V1
HalfLaurent skein_rhs(int sign, int e, const HalfLaurent& v0, const HalfLaurent& v1);

struct SkeinReport {
  int crossing = 0;
  int sign = 0;
  int e = 0;
  HalfLaurent jones;
  HalfLaurent jones_zero;
  HalfLaurent jones_one;
  HalfLaurent rhs;
  bool holds = false;
};

/// Computes V(L), V(L0), V(L1) independently and compares V(L) with the
/// skein right-hand side. A mismatch is reported, not thrown.
SkeinReport skein_check(const Diagram& d, int i, const Limits& limits = Limits::from_env());

}  // namespace qal
