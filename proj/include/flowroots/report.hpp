#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flowroots/audits.hpp"
#include "flowroots/flow.hpp"

namespace flowroots {

using Json = nlohmann::ordered_json;

/// Coefficients as decimal strings, constant term first.
Json poly_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json rational_json(const Rational& q);
Json interval_json(const Interval& iv);
Json graph_json(const MultiGraph& g);
Json invariants_json(const Invariants& inv);
Json roots_json(const RootProfile& prof);
Json classification_json(const Classification& c);
Json claims_json(const std::vector<ClaimRecord>& claims);
Json report_json(const AuditReport& rep);

std::string roots_text(const RootProfile& prof);
std::string invariants_text(const Invariants& inv);
std::string classification_text(const Classification& c);
std::string claims_text(const std::vector<ClaimRecord>& claims);
std::string report_text(const AuditReport& rep);

}  // namespace flowroots
