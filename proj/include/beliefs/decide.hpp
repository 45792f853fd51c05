#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "beliefs/mass.hpp"

namespace beliefs {

enum class DecisionFunctional { bel, pl, betp };
enum class DecisionScheme { argmax, appriou, distance };

std::string_view to_string(DecisionFunctional functional);
std::string_view to_string(DecisionScheme scheme);
DecisionFunctional decision_functional_from_string(std::string_view name);
DecisionScheme decision_scheme_from_string(std::string_view name);

/// Where and how to decide. An empty candidate list means the singletons of
/// the frame at hand. Ties always break toward the smaller cardinality,
/// then the smaller bitmask, so decisions are reproducible.
struct DecisionConfig {
  DecisionScheme scheme = DecisionScheme::argmax;
  DecisionFunctional functional = DecisionFunctional::betp;
  std::vector<Subset> candidates;
  double rho = 0.0;                           // cardinality penalty (appriou)
  std::map<std::uint32_t, double> lambda_x;   // per-candidate weights, default 1
};

struct DecisionResult {
  Subset chosen;
  /// Candidate scores in candidate order: the decision functional for
  /// argmax, the weighted functional for appriou, the Jousselme distance
  /// to the categorical candidate for the distance scheme.
  std::vector<std::pair<Subset, double>> scores;
};

/// Argmax of the decision functional over the candidates.
DecisionResult decide_argmax(const MassFunction& m, const DecisionConfig& config);

/// Argmax of m_d(X) * f_d(X) with m_d proportional to lambda_X / |X|^rho,
/// normalized over the candidate set.
DecisionResult decide_appriou(const MassFunction& m, const DecisionConfig& config);

/// The candidate whose categorical mass function is nearest in Jousselme
/// distance.
DecisionResult decide_distance(const MassFunction& m, const DecisionConfig& config);

/// Dispatch on config.scheme.
DecisionResult decide(const MassFunction& m, const DecisionConfig& config);

} // namespace beliefs
