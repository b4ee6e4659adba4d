#include "qal/families.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "qal/invariants.hpp"

namespace qal {

std::vector<Diagram> twist_family(const Diagram& d, int i, int n_max, TwistAxis axis) {
  if (n_max < 1) throw std::invalid_argument("twist family length must be >= 1");
  std::vector<Diagram> family;
  family.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) family.push_back(replace_crossing_with_tangle(d, i, n, axis));
  return family;
}

TwistAxis constant_det_axis(std::int64_t det_zero, std::int64_t det_one) {
  if (det_one == 0) return TwistAxis::parallel;
  if (det_zero == 0) return TwistAxis::antiparallel;
  return TwistAxis::parallel;
}

TwistAudit twist_family_audit(const Diagram& d, int i, int n_max, std::optional<TwistAxis> axis) {
  const SmoothingOutcome sm = smooth(d, i);
  const HalfLaurent v0 = jones(sm.zero_smoothing);
  const HalfLaurent v1 = jones(sm.one_smoothing);

  TwistAudit a;
  a.crossing = i;
  a.n_max = n_max;
  a.sign = sm.crossing_sign;
  a.det = determinant(d);
  a.det_zero = determinant_of_jones(v0);
  a.det_one = determinant_of_jones(v1);
  a.smoothing_jones_nonzero = !v0.is_zero() && !v1.is_zero();
  a.hypothesis = (a.det_zero == 0 || a.det_one == 0) && a.smoothing_jones_nonzero;
  a.axis = axis.value_or(constant_det_axis(a.det_zero, a.det_one));

  BracketCache cache;
  for (const Diagram& member : twist_family(d, i, n_max, a.axis)) {
    a.jones.push_back(jones(member, BracketMethod::skein, Limits::from_env(), &cache));
    a.dets.push_back(determinant_of_jones(a.jones.back()));
  }
  a.det_constant = std::all_of(a.dets.begin(), a.dets.end(), [&](std::int64_t x) { return x == a.det; });
  for (int p = 0; p < n_max; ++p) {
    for (int q = p + 1; q < n_max; ++q) {
      if (a.jones[p] == a.jones[q]) a.repeated.emplace_back(p + 1, q + 1);
    }
  }
  a.jones_distinct = a.repeated.empty();
  return a;
}

std::vector<NamedDiagram> twist_extensions(const std::vector<NamedDiagram>& base, int count, TwistAxis axis) {
  std::vector<NamedDiagram> out;
  const bool any = std::any_of(base.begin(), base.end(), [](const NamedDiagram& b) { return b.diagram.crossing_count() > 0; });
  if (!any) return out;
  for (int n = 2; static_cast<int>(out.size()) < count; ++n) {
    for (const auto& b : base) {
      for (int i = 0; i < b.diagram.crossing_count() && static_cast<int>(out.size()) < count; ++i) {
        NamedDiagram e;
        e.name = b.name + "~c" + std::to_string(i) + "n" + std::to_string(n);
        e.diagram = replace_crossing_with_tangle(b.diagram, i, n, axis);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

DegreeAudit degree_bound_audit(const Diagram& d, int i, int m_twice, int M_twice) {
  const SmoothingOutcome sm = smooth(d, i);
  const DegreeStats s0 = degree_stats(jones(sm.zero_smoothing));
  const DegreeStats s1 = degree_stats(jones(sm.one_smoothing));
  if (m_twice > std::min(s0.min_twice, s1.min_twice) || M_twice < std::max(s0.max_twice, s1.max_twice)) {
    throw std::invalid_argument("degree bounds [" + std::to_string(m_twice) + ", " + std::to_string(M_twice) +
                                "] do not cover both smoothings");
  }
  const DegreeStats s = degree_stats(jones(d));

  DegreeAudit a;
  a.crossing = i;
  a.sign = sm.crossing_sign;
  a.e = sm.e;
  a.m_twice = m_twice;
  a.M_twice = M_twice;
  a.min_twice = s.min_twice;
  a.max_twice = s.max_twice;
  a.offset_twice = std::abs(3 * a.e + 2);
  a.lower_ok = s.min_twice >= m_twice - a.offset_twice;
  a.upper_ok = s.max_twice <= M_twice + a.offset_twice;
  a.literal_offset_twice = a.sign > 0 ? a.offset_twice : std::abs(3 * a.e - 2);
  a.literal_ok = s.min_twice >= m_twice - a.literal_offset_twice && s.max_twice <= M_twice + a.literal_offset_twice;
  return a;
}

DegreeAudit root_degree_audit(const Certificate& cert) {
  if (cert.is_leaf()) throw std::invalid_argument("root audit needs a branch certificate");
  const auto& b = *cert.branch;
  const DegreeStats s0 = degree_stats(jones(b.children[0].diagram));
  const DegreeStats s1 = degree_stats(jones(b.children[1].diagram));
  return degree_bound_audit(cert.diagram, b.crossing, std::min(s0.min_twice, s1.min_twice),
                            std::max(s0.max_twice, s1.max_twice));
}

bool ClassReport::audits_passed() const {
  return std::all_of(values.begin(), values.end(), [](const ClassValue& v) { return v.audit.passed(); });
}

namespace {

struct EntryResult {
  CertifyStatus status = CertifyStatus::not_certified;
  HalfLaurent jones;
  std::int64_t det = 0;
  std::optional<DegreeAudit> root_audit;
};

EntryResult run_entry(const NamedDiagram& entry, Certifier& certifier) {
  EntryResult r;
  CertifyResult c = certifier.certify(entry.diagram);
  r.status = c.status;
  if (c.status != CertifyStatus::certified) return r;
  r.jones = jones(entry.diagram);
  r.det = determinant_of_jones(r.jones);
  if (!c.certificate->is_leaf()) r.root_audit = root_degree_audit(*c.certificate);
  return r;
}

}  // namespace

Enumeration enumerate_classes(const std::vector<NamedDiagram>& corpus, const SearchBudget& budget, bool parallel) {
  budget.validate();
  std::vector<EntryResult> results(corpus.size());

  const unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers <= 1 || corpus.size() < 2) {
    Certifier certifier(budget);
    for (std::size_t k = 0; k < corpus.size(); ++k) results[k] = run_entry(corpus[k], certifier);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        Certifier certifier(budget);
        for (std::size_t k = next++; k < corpus.size(); k = next++) results[k] = run_entry(corpus[k], certifier);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Assemble in name order so the report is independent of scheduling.
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return corpus[a].name < corpus[b].name; });

  Enumeration out;
  std::map<std::int64_t, std::map<HalfLaurent, std::vector<std::string>>> groups;
  for (std::size_t k : order) {
    const EntryResult& r = results[k];
    if (r.status != CertifyStatus::certified) {
      out.uncertified.push_back({corpus[k].name, r.status});
      continue;
    }
    groups[r.det][r.jones].push_back(corpus[k].name);
    if (r.root_audit) out.root_audits.push_back({corpus[k].name, *r.root_audit});
  }

  for (auto& [det, values] : groups) {
    ClassReport report;
    report.determinant = det;
    bool first = true;
    for (auto& [v, members] : values) {
      const DegreeStats s = degree_stats(v);
      report.m_twice = first ? s.min_twice : std::min(report.m_twice, s.min_twice);
      report.M_twice = first ? s.max_twice : std::max(report.M_twice, s.max_twice);
      first = false;
      report.values.push_back({v, std::move(members), audit_jones(v, det)});
    }
    out.classes.push_back(std::move(report));
  }
  return out;
}

}  // namespace qal
