#pragma once

#include <json.hpp>
#include <string>

#include "latnorm/catalog.hpp"
#include "latnorm/fan.hpp"
#include "latnorm/normality.hpp"
#include "latnorm/polytope.hpp"

namespace latnorm {

// Polytope JSON: {"vertices": [[int, ...], ...], "name": optional string}.
// Ragged coordinate arrays and non-integer entries are rejected.
nlohmann::json polytope_to_json(const LatticePolytope& p,
                                const std::string& name = "");
LatticePolytope polytope_from_json(const nlohmann::json& j,
                                   std::string* name_out = nullptr);

nlohmann::json report_to_json(const NormalityReport& rep);
NormalityReport report_from_json(const nlohmann::json& j);

// Certificate JSON: tagged-union tree; verify_certificate accepts exactly
// what certificate_to_json/from_json round-trip.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json fan_to_json(const FanDescriptor& fan);

// Deliberately omits timing so identical arguments give identical bytes.
nlohmann::json harness_to_json(const HarnessReport& rep);

}  // namespace latnorm
