#include "beliefs/decide.hpp"

#include <cmath>

#include "beliefs/conflict.hpp"

namespace beliefs {

namespace {

std::vector<Subset> resolve_candidates(const MassFunction& m, const DecisionConfig& config) {
  std::vector<Subset> candidates = config.candidates;
  if (candidates.empty()) {
    const auto& frame = m.frame();
    candidates.reserve(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
      candidates.push_back(Subset::singleton(frame, i));
    }
  }
  for (const auto& candidate : candidates) {
    require_same_frame(candidate.frame(), m.frame());
    if (candidate.is_empty()) {
      throw validation_error("the empty set cannot be a decision candidate");
    }
  }
  return candidates;
}

double functional_value(const MassFunction& m, DecisionFunctional functional, const Subset& x) {
  switch (functional) {
    case DecisionFunctional::bel: return m.bel(x);
    case DecisionFunctional::pl: return m.pl(x);
    case DecisionFunctional::betp: return m.betp(x);
  }
  throw validation_error("unknown decision functional");
}

// Deterministic selection: best score first, then smaller cardinality,
// then smaller bitmask.
template <typename Better>
DecisionResult select(std::vector<std::pair<Subset, double>> scores, Better better) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    const auto& [subset, score] = scores[i];
    const auto& [best_subset, best_score] = scores[best];
    if (better(score, best_score) ||
        (score == best_score &&
         (subset.cardinality() < best_subset.cardinality() ||
          (subset.cardinality() == best_subset.cardinality() && subset.bits() < best_subset.bits())))) {
      best = i;
    }
  }
  return DecisionResult{scores[best].first, std::move(scores)};
}

} // namespace

std::string_view to_string(DecisionFunctional functional) {
  switch (functional) {
    case DecisionFunctional::bel: return "bel";
    case DecisionFunctional::pl: return "pl";
    case DecisionFunctional::betp: return "betp";
  }
  throw validation_error("unknown decision functional");
}

std::string_view to_string(DecisionScheme scheme) {
  switch (scheme) {
    case DecisionScheme::argmax: return "argmax";
    case DecisionScheme::appriou: return "appriou";
    case DecisionScheme::distance: return "distance";
  }
  throw validation_error("unknown decision scheme");
}

DecisionFunctional decision_functional_from_string(std::string_view name) {
  if (name == "bel") return DecisionFunctional::bel;
  if (name == "pl") return DecisionFunctional::pl;
  if (name == "betp") return DecisionFunctional::betp;
  throw validation_error("unknown decision functional: " + std::string(name));
}

DecisionScheme decision_scheme_from_string(std::string_view name) {
  if (name == "argmax") return DecisionScheme::argmax;
  if (name == "appriou") return DecisionScheme::appriou;
  if (name == "distance") return DecisionScheme::distance;
  throw validation_error("unknown decision scheme: " + std::string(name));
}

DecisionResult decide_argmax(const MassFunction& m, const DecisionConfig& config) {
  const auto candidates = resolve_candidates(m, config);
  std::vector<std::pair<Subset, double>> scores;
  scores.reserve(candidates.size());
  for (const auto& x : candidates) {
    scores.emplace_back(x, functional_value(m, config.functional, x));
  }
  return select(std::move(scores), [](double a, double b) { return a > b; });
}

DecisionResult decide_appriou(const MassFunction& m, const DecisionConfig& config) {
  if (config.rho < 0.0 || config.rho > 1.0) {
    throw validation_error("rho must lie in [0,1]");
  }
  const auto candidates = resolve_candidates(m, config);

  std::vector<double> decision_mass(candidates.size());
  double total = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto it = config.lambda_x.find(candidates[i].bits());
    const double lambda = it == config.lambda_x.end() ? 1.0 : it->second;
    if (lambda < 0.0) {
      throw validation_error("candidate weights must be non-negative");
    }
    decision_mass[i] =
        lambda * std::pow(static_cast<double>(candidates[i].cardinality()), -config.rho);
    total += decision_mass[i];
  }
  if (total <= 0.0) {
    throw validation_error("all candidate weights vanish");
  }

  std::vector<std::pair<Subset, double>> scores;
  scores.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double md = decision_mass[i] / total;
    scores.emplace_back(candidates[i], md * functional_value(m, config.functional, candidates[i]));
  }
  return select(std::move(scores), [](double a, double b) { return a > b; });
}

DecisionResult decide_distance(const MassFunction& m, const DecisionConfig& config) {
  const auto candidates = resolve_candidates(m, config);
  std::vector<std::pair<Subset, double>> scores;
  scores.reserve(candidates.size());
  for (const auto& x : candidates) {
    scores.emplace_back(x, jousselme_distance(m, MassFunction::categorical(x)));
  }
  return select(std::move(scores), [](double a, double b) { return a < b; });
}

DecisionResult decide(const MassFunction& m, const DecisionConfig& config) {
  switch (config.scheme) {
    case DecisionScheme::argmax: return decide_argmax(m, config);
    case DecisionScheme::appriou: return decide_appriou(m, config);
    case DecisionScheme::distance: return decide_distance(m, config);
  }
  throw validation_error("unknown decision scheme");
}

} // namespace beliefs
