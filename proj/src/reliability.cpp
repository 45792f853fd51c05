#include "beliefs/reliability.hpp"

#include <algorithm>
#include <cmath>

namespace beliefs {

double reliability_from_conflict(double conflict, double lambda) {
  if (!(lambda > 0.0)) {
    throw validation_error("lambda must be positive");
  }
  if (conflict < 0.0 || conflict > 1.0) {
    throw validation_error("conflict must lie in [0,1]");
  }
  return std::pow(1.0 - std::pow(conflict, lambda), 1.0 / lambda);
}

DiscountResult discount_by_conflict(std::span<const MassFunction> sources,
                                    const DiscountConfig& config) {
  if (sources.size() < 2) {
    throw validation_error("conflict-based discounting needs at least two sources");
  }
  DiscountResult result;
  result.profile.lambda = config.lambda;
  result.profile.provenance = "conflict-derived";
  result.profile.alphas.reserve(sources.size());
  result.discounted.reserve(sources.size());

  for (std::size_t j = 0; j < sources.size(); ++j) {
    const double conflict = config.method == SourceConflictMethod::average
                                ? source_conflict_average(j, sources, config.measure)
                                : source_conflict_combined(j, sources, config.measure,
                                                           config.combiner);
    const double alpha = reliability_from_conflict(conflict, config.lambda);
    result.profile.alphas.push_back(alpha);
    result.discounted.push_back(sources[j].discounted(alpha));
  }
  return result;
}

double estimate_alpha_pignistic(const MassFunction& m, const Subset& supported) {
  require_same_frame(supported.frame(), m.frame());
  if (supported.cardinality() != 1) {
    throw validation_error("the supported hypothesis must be a singleton");
  }
  if (1.0 - m.mass_on_empty() <= 0.0) {
    throw computation_error("pignistic fit undefined: all mass on the empty set");
  }

  const auto& frame = m.frame();
  const double uniform = 1.0 / static_cast<double>(frame.size());

  // Objective: sum over singletons of (alpha*(BetP - 1/n) + 1/n - delta)^2,
  // quadratic in alpha with minimizer sum(u*v)/sum(u*u).
  double uv = 0.0;
  double uu = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Subset singleton = Subset::singleton(frame, i);
    const double u = m.betp(singleton) - uniform;
    const double target = singleton == supported ? 1.0 : 0.0;
    uv += u * (target - uniform);
    uu += u * u;
  }
  if (uu <= 0.0) {
    return 1.0; // constant objective: keep the source
  }
  return std::clamp(uv / uu, 0.0, 1.0);
}

} // namespace beliefs
