#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "etaint/identities.hpp"

namespace etaint {

nlohmann::json to_json(const CheckResult& r);
nlohmann::json make_report(const std::vector<CheckResult>& results, const RunConfig& cfg,
                           const std::string& run_id, const std::string& timestamp);
std::string to_csv(const std::vector<CheckResult>& results);

// Minimal validator for the subset of JSON Schema used by docs/report.schema.json:
// type, required, properties, items, enum, minimum. Returns the list of violations.
std::vector<std::string> validate_schema(const nlohmann::json& doc, const nlohmann::json& schema);

}  // namespace etaint
