#include "qal/report.hpp"

namespace qal {

using nlohmann::json;

const char* to_string(TwistAxis axis) { return axis == TwistAxis::parallel ? "parallel" : "antiparallel"; }

json describe(const Diagram& d) {
  return {{"pd", to_pd(d)},
          {"crossings", d.crossing_count()},
          {"components", d.component_count()},
          {"writhe", writhe(d)},
          {"free_circles", d.free_circles()}};
}

void to_json(json& j, const HalfLaurent& p) { j = to_string(p); }

void to_json(json& j, const Certificate& c) {
  if (c.is_leaf()) {
    j = {{"kind", "leaf"}, {"pd", to_pd(c.diagram)}};
    return;
  }
  const auto& b = *c.branch;
  j = {{"kind", "branch"},
       {"pd", to_pd(c.diagram)},
       {"crossing", b.crossing},
       {"det", {b.det, b.det_zero, b.det_one}},
       {"children", b.children}};
}

void to_json(json& j, const ObstructionRecord& r) {
  j = {{"jones", r.jones},
       {"determinant", r.det},
       {"alternating", r.alternating},
       {"coeff_bound", r.coeff_bound},
       {"det_consistency",
        {{"alt_sum_abs", r.det_consistency.alt_sum_abs.get_str()},
         {"eval_abs", r.det_consistency.eval_abs.get_str()},
         {"consistent", r.det_consistency.consistent}}},
       {"breadth", {{"value", r.breadth.breadth_text()}, {"within_conjecture", r.breadth.within_conjecture}}},
       {"passed", r.passed()}};
}

void to_json(json& j, const SkeinReport& r) {
  j = {{"crossing", r.crossing}, {"sign", r.sign},       {"e", r.e},     {"jones", r.jones},
       {"jones_zero", r.jones_zero}, {"jones_one", r.jones_one}, {"rhs", r.rhs}, {"holds", r.holds}};
}

void to_json(json& j, const TwistAudit& a) {
  json repeated = json::array();
  for (const auto& [p, q] : a.repeated) repeated.push_back({p, q});
  j = {{"crossing", a.crossing},
       {"n_max", a.n_max},
       {"sign", a.sign},
       {"axis", to_string(a.axis)},
       {"det", a.det},
       {"det_zero", a.det_zero},
       {"det_one", a.det_one},
       {"smoothing_jones_nonzero", a.smoothing_jones_nonzero},
       {"hypothesis", a.hypothesis},
       {"dets", a.dets},
       {"jones", a.jones},
       {"det_constant", a.det_constant},
       {"jones_distinct", a.jones_distinct},
       {"repeated_pairs", repeated}};
}

void to_json(json& j, const DegreeAudit& a) {
  j = {{"crossing", a.crossing},       {"sign", a.sign},           {"e", a.e},
       {"m_twice", a.m_twice},         {"M_twice", a.M_twice},     {"min_twice", a.min_twice},
       {"max_twice", a.max_twice},     {"offset_twice", a.offset_twice}, {"lower_ok", a.lower_ok},
       {"upper_ok", a.upper_ok},       {"literal_offset_twice", a.literal_offset_twice},
       {"literal_ok", a.literal_ok},   {"passed", a.passed()}};
}

void to_json(json& j, const ClassReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back({{"jones", v.jones}, {"members", v.members}, {"audit", v.audit}});
  j = {{"determinant", r.determinant},
       {"observed_values", values},
       {"m_twice", r.m_twice},
       {"M_twice", r.M_twice},
       {"audits_passed", r.audits_passed()}};
}

void to_json(json& j, const Enumeration& e) {
  json uncertified = json::array();
  for (const auto& u : e.uncertified) uncertified.push_back({{"name", u.name}, {"outcome", to_string(u.status)}});
  json audits = json::array();
  for (const auto& a : e.root_audits) audits.push_back({{"name", a.name}, {"audit", a.audit}});
  j = {{"classes", e.classes}, {"uncertified", uncertified}, {"root_degree_audits", audits}};
}

}  // namespace qal
