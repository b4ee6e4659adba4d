#pragma once

// JSON views of library results (nlohmann::json, found by ADL). Polynomials
// are rendered in canonical text form, diagrams as PD strings.

#include <nlohmann/json.hpp>

#include "qal/families.hpp"
#include "qal/invariants.hpp"
#include "qal/obstructions.hpp"
#include "qal/qa.hpp"

namespace qal {

void to_json(nlohmann::json& j, const HalfLaurent& p);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const ObstructionRecord& r);
void to_json(nlohmann::json& j, const SkeinReport& r);
void to_json(nlohmann::json& j, const TwistAudit& a);
void to_json(nlohmann::json& j, const DegreeAudit& a);
void to_json(nlohmann::json& j, const ClassReport& r);
void to_json(nlohmann::json& j, const Enumeration& e);

const char* to_string(TwistAxis axis);

/// {pd, crossings, components, writhe, free_circles}
nlohmann::json describe(const Diagram& d);

}  // namespace qal
