#pragma once

#include <json.hpp>

#include <string>

#include "linkhom/invariants.hpp"

namespace linkhom {

// JSON report schema, version 1. Every report object carries
// {"schema_version": 1, "command": <name>, ...}; mu-bar tables are keyed by
// the multi-index string "i1i2...ik"; series are rendered in the canonical
// term order.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json report_header(const std::string& command);

nlohmann::json to_json(const MuBarReport& rep);
nlohmann::json to_json(const SplitReport& rep);
nlohmann::json to_json(const LambdaReport& rep);
nlohmann::json presentation_json(const PresentationBundle& bundle);
nlohmann::json presentation_json(const DirectPresentation& p, int max_degree = -1);

std::string mu_index_key(const std::vector<int>& index);

}  // namespace linkhom
