#include "qal/invariants.hpp"

#include <cstdlib>
#include <functional>
#include <vector>

#include "disjoint_set.hpp"

namespace qal {

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("QAL_MAX_CROSSINGS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) {
      limits.statesum_max_crossings = static_cast<int>(v);
      limits.skein_max_crossings = static_cast<int>(v);
    }
  }
  return limits;
}

HalfLaurent loop_value() {
  HalfLaurent delta;
  delta.add_term(-4, -1);
  delta.add_term(4, -1);
  return delta;
}

namespace {

void check_cap(const Diagram& d, int cap, const char* what) {
  if (d.crossing_count() > cap) {
    throw ResourceError(std::string(what) + ": " + std::to_string(d.crossing_count()) +
                        " crossings exceeds the cap of " + std::to_string(cap) + " (set QAL_MAX_CROSSINGS)");
  }
}

HalfLaurent loop_power(int loops) {
  if (loops < 1) throw InvariantViolation("state with no loops");
  return power(loop_value(), static_cast<unsigned>(loops - 1));
}

}  // namespace

HalfLaurent bracket_statesum(const Diagram& d, const Limits& limits) {
  check_cap(d, limits.statesum_max_crossings, "state sum");
  const int n = d.crossing_count();
  const int edges = d.edge_count();
  if (n == 0) return loop_power(d.free_circles());

  // counts[a][loops]: number of states with `a` A-smoothings and `loops` loops.
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(edges + 1, 0));
  detail::DisjointSet dsu;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < states; ++s) {
    dsu.reset(edges);
    int a_count = 0;
    for (int x = 0; x < n; ++x) {
      const Quad& q = d.crossings()[x].edges;
      if (((s >> x) & 1u) == 0) {
        ++a_count;
        dsu.unite(q[0] - 1, q[1] - 1);
        dsu.unite(q[2] - 1, q[3] - 1);
      } else {
        dsu.unite(q[0] - 1, q[3] - 1);
        dsu.unite(q[1] - 1, q[2] - 1);
      }
    }
    ++counts[a_count][dsu.sets()];
  }

  HalfLaurent total;
  std::vector<HalfLaurent> loop_powers;
  for (int loops = 1; loops <= edges + d.free_circles(); ++loops) loop_powers.push_back(loop_power(loops));
  for (int a = 0; a <= n; ++a) {
    HalfLaurent row;
    for (int loops = 1; loops <= edges; ++loops) {
      if (counts[a][loops] == 0) continue;
      row += HalfLaurent::constant(mpz_class(std::to_string(counts[a][loops]))) *
             loop_powers[loops + d.free_circles() - 1];
    }
    total += mono_mul(row, 1, 2 * (a - (n - a)));
  }
  return total;
}

namespace {

HalfLaurent skein_eval(const Diagram& d, BracketCache& cache) {
  const Reduction r = reduce(d);
  const Diagram& core = r.diagram;
  HalfLaurent value;
  if (core.crossing_count() == 0) {
    value = loop_power(core.free_circles());
  } else {
    const std::string key = canonical_key(core);
    if (const HalfLaurent* hit = cache.find(key)) {
      value = *hit;
    } else {
      value = mono_mul(skein_eval(splice(core, 0, Splice::A), cache), 1, 2) +
              mono_mul(skein_eval(splice(core, 0, Splice::B), cache), 1, -2);
      cache.insert(key, value);
    }
  }
  const int kinks = r.a_kinks + r.b_kinks;
  return mono_mul(value, kinks % 2 == 0 ? 1 : -1, 6 * (r.a_kinks - r.b_kinks));
}

}  // namespace

HalfLaurent bracket_skein(const Diagram& d, const Limits& limits, BracketCache* cache) {
  check_cap(d, limits.skein_max_crossings, "skein recursion");
  BracketCache local;
  return skein_eval(d, cache ? *cache : local);
}

HalfLaurent bracket(const Diagram& d, BracketMethod method, const Limits& limits, BracketCache* cache) {
  return method == BracketMethod::statesum ? bracket_statesum(d, limits) : bracket_skein(d, limits, cache);
}

HalfLaurent jones_from_bracket(const HalfLaurent& bracket, int writhe) {
  const HalfLaurent normalized = mono_mul(bracket, writhe % 2 == 0 ? 1 : -1, -6 * writhe);
  HalfLaurent v;
  for (const auto& [twice_a, c] : normalized.terms()) {
    if (twice_a % 4 != 0) {
      throw InvariantViolation("odd power of A after writhe normalization: A^" + std::to_string(twice_a / 2));
    }
    v.add_term(-twice_a / 4, c);
  }
  return v;
}

HalfLaurent jones(const Diagram& d, BracketMethod method, const Limits& limits, BracketCache* cache) {
  return jones_from_bracket(bracket(d, method, limits, cache), writhe(d));
}

std::int64_t determinant_of_jones(const HalfLaurent& v) {
  const GaussInt z = evaluate_at_i(v);
  if (z.re != 0 && z.im != 0) {
    throw InvariantViolation("V(-1) = " + to_string(z) + " is not a unit times an integer");
  }
  const mpz_class d = abs(z.re) + abs(z.im);
  if (!d.fits_slong_p()) throw ResourceError("determinant does not fit in 64 bits");
  return d.get_si();
}

std::int64_t determinant(const Diagram& d, const Limits& limits, BracketCache* cache) {
  return determinant_of_jones(jones(d, BracketMethod::skein, limits, cache));
}

HalfLaurent skein_rhs(int sign, int e, const HalfLaurent& v0, const HalfLaurent& v1) {
  if (sign > 0) return mono_mul(v0, -1, 1) + mono_mul(v1, -1, 3 * e + 2);
  return mono_mul(v0, -1, -1) + mono_mul(v1, -1, -3 * e - 2);
}

SkeinReport skein_check(const Diagram& d, int i, const Limits& limits) {
  const SmoothingOutcome sm = smooth(d, i);
  SkeinReport report;
  report.crossing = i;
  report.sign = sm.crossing_sign;
  report.e = sm.e;
  report.jones = jones(d, BracketMethod::skein, limits);
  report.jones_zero = jones(sm.zero_smoothing, BracketMethod::skein, limits);
  report.jones_one = jones(sm.one_smoothing, BracketMethod::skein, limits);
  report.rhs = skein_rhs(report.sign, report.e, report.jones_zero, report.jones_one);
  report.holds = report.rhs == report.jones;
  return report;
}

}  // namespace qal
