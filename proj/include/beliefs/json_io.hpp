#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "beliefs/conflict.hpp"
#include "beliefs/decide.hpp"
#include "beliefs/mass.hpp"
#include "beliefs/reliability.hpp"

namespace beliefs::io {

using nlohmann::json;

json to_json(const Frame& frame);
Frame frame_from_json(const json& j);

/// Subsets serialize as arrays of member labels; [] is the empty set.
json to_json(const Subset& subset);
Subset subset_from_json(const Frame& frame, const json& j);

json to_json(const MassFunction& m);
MassFunction mass_from_json(const json& j, double tolerance = mass_sum_tolerance);

json to_json(const ConflictReport& report);
json to_json(const ReliabilityProfile& profile);

/// Candidate weights are keyed by the comma-joined member labels of the
/// candidate, e.g. "w1,w3".
std::string subset_key(const Subset& subset);
DecisionConfig decision_config_from_json(const Frame& frame, const json& j);
json to_json(const DecisionConfig& config);
json to_json(const DecisionResult& result);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const json& j, const std::filesystem::path& path);

MassFunction load_mass(const std::filesystem::path& path, double tolerance = mass_sum_tolerance);
void save_mass(const MassFunction& m, const std::filesystem::path& path);

} // namespace beliefs::io
