#include "beliefs/json_io.hpp"

#include <fstream>

namespace beliefs::io {

namespace {

const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw validation_error(std::string("missing field: ") + key);
  }
  return *it;
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw validation_error(std::string(what) + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw validation_error(std::string(what) + " must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

} // namespace

json to_json(const Frame& frame) { return json{{"labels", frame.labels()}}; }

Frame frame_from_json(const json& j) {
  return Frame(string_array(require_field(j, "labels"), "frame labels"));
}

json to_json(const Subset& subset) { return json(subset.member_labels()); }

Subset subset_from_json(const Frame& frame, const json& j) {
  const auto labels = string_array(j, "subset");
  return Subset::from_labels(frame, labels);
}

json to_json(const MassFunction& m) {
  json focals = json::array();
  for (const auto& [subset, mass] : m.focal_elements()) {
    focals.push_back(json{{"set", to_json(subset)}, {"mass", mass}});
  }
  return json{{"frame", to_json(m.frame())}, {"focals", std::move(focals)}};
}

MassFunction mass_from_json(const json& j, double tolerance) {
  const Frame frame = frame_from_json(require_field(j, "frame"));
  const json& focals = require_field(j, "focals");
  if (!focals.is_array()) {
    throw validation_error("focals must be an array");
  }
  std::vector<std::pair<Subset, double>> assignments;
  assignments.reserve(focals.size());
  for (const auto& item : focals) {
    const json& mass = require_field(item, "mass");
    if (!mass.is_number()) {
      throw validation_error("mass must be a number");
    }
    assignments.emplace_back(subset_from_json(frame, require_field(item, "set")),
                             mass.get<double>());
  }
  return MassFunction(frame, assignments, tolerance);
}

json to_json(const ConflictReport& report) {
  json j{{"measure", to_string(report.measure)},
         {"method", to_string(report.method)},
         {"pairwise", report.pairwise},
         {"per_source", report.per_source}};
  if (report.measure == ConflictMeasure::inclusion_distance) {
    j["variant"] = to_string(report.variant);
  }
  if (report.method == SourceConflictMethod::combined) {
    j["combiner"] = to_string(report.combiner);
  }
  return j;
}

json to_json(const ReliabilityProfile& profile) {
  return json{{"lambda", profile.lambda},
              {"alphas", profile.alphas},
              {"provenance", profile.provenance}};
}

std::string subset_key(const Subset& subset) {
  std::string key;
  for (const auto& label : subset.member_labels()) {
    if (!key.empty()) key += ',';
    key += label;
  }
  return key;
}

DecisionConfig decision_config_from_json(const Frame& frame, const json& j) {
  DecisionConfig config;
  if (const auto it = j.find("scheme"); it != j.end()) {
    config.scheme = decision_scheme_from_string(it->get<std::string>());
  }
  if (const auto it = j.find("fd"); it != j.end()) {
    config.functional = decision_functional_from_string(it->get<std::string>());
  }
  if (const auto it = j.find("rho"); it != j.end()) {
    config.rho = it->get<double>();
  }
  if (const auto it = j.find("candidates"); it != j.end()) {
    for (const auto& candidate : *it) {
      config.candidates.push_back(subset_from_json(frame, candidate));
    }
  }
  if (const auto it = j.find("lambda_x"); it != j.end()) {
    for (const auto& [key, value] : it->items()) {
      std::vector<std::string> labels;
      std::string current;
      for (const char c : key) {
        if (c == ',') {
          labels.push_back(current);
          current.clear();
        } else {
          current += c;
        }
      }
      if (!current.empty()) labels.push_back(current);
      const Subset subset = Subset::from_labels(frame, labels);
      config.lambda_x[subset.bits()] = value.get<double>();
    }
  }
  return config;
}

json to_json(const DecisionConfig& config) {
  json j{{"scheme", to_string(config.scheme)},
         {"fd", to_string(config.functional)},
         {"rho", config.rho}};
  json candidates = json::array();
  for (const auto& candidate : config.candidates) {
    candidates.push_back(to_json(candidate));
  }
  j["candidates"] = std::move(candidates);
  return j;
}

json to_json(const DecisionResult& result) {
  json scores = json::object();
  for (const auto& [subset, score] : result.scores) {
    scores[subset_key(subset)] = score;
  }
  return json{{"chosen", to_json(result.chosen)}, {"scores", std::move(scores)}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw validation_error("cannot parse " + path.string() + ": " + e.what());
  }
}

void save_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw validation_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

MassFunction load_mass(const std::filesystem::path& path, double tolerance) {
  return mass_from_json(load_json_file(path), tolerance);
}

void save_mass(const MassFunction& m, const std::filesystem::path& path) {
  save_json_file(to_json(m), path);
}

} // namespace beliefs::io
