#include "beliefs/conflict.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace beliefs {

namespace {

double jaccard_similarity(std::uint32_t a, std::uint32_t b) {
  if (a == 0 && b == 0) return 1.0;
  const auto uni = std::popcount(a | b);
  return static_cast<double>(std::popcount(a & b)) / static_cast<double>(uni);
}

std::vector<std::uint32_t> focal_keys(const MassFunction& m) {
  std::vector<std::uint32_t> keys;
  keys.reserve(m.focal_count());
  for (const auto& [bits, mass] : m.focals()) keys.push_back(bits);
  return keys;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace

std::string_view to_string(ConflictMeasure measure) {
  switch (measure) {
    case ConflictMeasure::distance: return "distance";
    case ConflictMeasure::inclusion_distance: return "inclusion-distance";
    case ConflictMeasure::plausibility_cosine: return "plausibility-cosine";
    case ConflictMeasure::global_kappa: return "global-kappa";
  }
  throw validation_error("unknown conflict measure");
}

std::string_view to_string(SourceConflictMethod method) {
  switch (method) {
    case SourceConflictMethod::average: return "avg";
    case SourceConflictMethod::combined: return "combined";
  }
  throw validation_error("unknown source conflict method");
}

std::string_view to_string(InclusionVariant variant) {
  switch (variant) {
    case InclusionVariant::strict: return "strict";
    case InclusionVariant::light: return "light";
  }
  throw validation_error("unknown inclusion variant");
}

ConflictMeasure conflict_measure_from_string(std::string_view name) {
  if (name == "distance") return ConflictMeasure::distance;
  if (name == "inclusion-distance") return ConflictMeasure::inclusion_distance;
  if (name == "plausibility-cosine") return ConflictMeasure::plausibility_cosine;
  if (name == "global-kappa") return ConflictMeasure::global_kappa;
  throw validation_error("unknown conflict measure: " + std::string(name));
}

SourceConflictMethod source_method_from_string(std::string_view name) {
  if (name == "avg") return SourceConflictMethod::average;
  if (name == "combined") return SourceConflictMethod::combined;
  throw validation_error("unknown source conflict method: " + std::string(name));
}

InclusionVariant inclusion_variant_from_string(std::string_view name) {
  if (name == "strict") return InclusionVariant::strict;
  if (name == "light") return InclusionVariant::light;
  throw validation_error("unknown inclusion variant: " + std::string(name));
}

double global_conflict(std::span<const MassFunction> sources) {
  if (sources.size() < 2) {
    throw validation_error("global conflict needs at least two mass functions");
  }
  return conjunctive(sources).mass_on_empty();
}

double auto_conflict(const MassFunction& m, std::size_t order) {
  if (order < 2) {
    throw validation_error("auto-conflict order must be at least 2");
  }
  std::vector<MassFunction> copies(order, m);
  return conjunctive(copies).mass_on_empty();
}

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());

  std::vector<std::pair<std::uint32_t, double>> diff;
  for (const auto& [bits, mass] : m1.focals()) {
    diff.emplace_back(bits, mass - m2.mass_bits(bits));
  }
  for (const auto& [bits, mass] : m2.focals()) {
    if (m1.focals().count(bits) == 0) diff.emplace_back(bits, -mass);
  }

  double quad = 0.0;
  for (const auto& [a, da] : diff) {
    for (const auto& [b, db] : diff) {
      quad += da * db * jaccard_similarity(a, b);
    }
  }
  return std::sqrt(std::max(0.0, 0.5 * quad));
}

double plausibility_cosine_conflict(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  const auto& frame = m1.frame();

  double dot = 0.0, norm1 = 0.0, norm2 = 0.0;
  for (std::uint32_t bits = 0; bits <= frame.full_bits(); ++bits) {
    const Subset x(frame, bits);
    const double p1 = m1.pl(x);
    const double p2 = m2.pl(x);
    dot += p1 * p2;
    norm1 += p1 * p1;
    norm2 += p2 * p2;
  }
  if (norm1 <= 0.0 || norm2 <= 0.0) {
    throw computation_error("plausibility vector is identically zero");
  }
  return clamp01(1.0 - dot / std::sqrt(norm1 * norm2));
}

double inclusion_degree_directed(const MassFunction& m1, const MassFunction& m2,
                                 InclusionVariant variant) {
  require_same_frame(m1.frame(), m2.frame());
  const auto f1 = focal_keys(m1);
  const auto f2 = focal_keys(m2);
  if (f1.empty() || f2.empty()) {
    throw validation_error("inclusion degree needs non-empty focal sets");
  }

  double sum = 0.0;
  for (const auto x1 : f1) {
    if (variant == InclusionVariant::strict) {
      for (const auto y2 : f2) {
        if ((x1 & ~y2) == 0) sum += 1.0;
      }
    } else {
      for (const auto y2 : f2) {
        if ((x1 & ~y2) == 0) {
          sum += 1.0;
          break;
        }
      }
    }
  }
  const double denom = variant == InclusionVariant::strict
                           ? static_cast<double>(f1.size()) * static_cast<double>(f2.size())
                           : static_cast<double>(f1.size());
  return sum / denom;
}

double inclusion_degree(const MassFunction& m1, const MassFunction& m2, InclusionVariant variant) {
  return std::max(inclusion_degree_directed(m1, m2, variant),
                  inclusion_degree_directed(m2, m1, variant));
}

double inclusion_distance_conflict(const MassFunction& m1, const MassFunction& m2,
                                   InclusionVariant variant) {
  return (1.0 - inclusion_degree(m1, m2, variant)) * jousselme_distance(m1, m2);
}

double pairwise_conflict(const MassFunction& m1, const MassFunction& m2,
                         const MeasureConfig& config) {
  switch (config.measure) {
    case ConflictMeasure::distance: return jousselme_distance(m1, m2);
    case ConflictMeasure::inclusion_distance:
      return inclusion_distance_conflict(m1, m2, config.variant);
    case ConflictMeasure::plausibility_cosine: return plausibility_cosine_conflict(m1, m2);
    case ConflictMeasure::global_kappa: {
      const MassFunction pair[] = {m1, m2};
      return global_conflict(pair);
    }
  }
  throw validation_error("unknown conflict measure");
}

namespace {

std::vector<MassFunction> others_of(std::size_t j, std::span<const MassFunction> sources) {
  if (sources.size() < 2) {
    throw validation_error("per-source conflict needs at least two sources");
  }
  if (j >= sources.size()) {
    throw validation_error("source index out of range");
  }
  std::vector<MassFunction> others;
  others.reserve(sources.size() - 1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i != j) others.push_back(sources[i]);
  }
  return others;
}

} // namespace

double source_conflict_average(std::size_t j, std::span<const MassFunction> sources,
                               const MeasureConfig& config) {
  const auto others = others_of(j, sources);
  double sum = 0.0;
  for (const auto& other : others) {
    sum += pairwise_conflict(sources[j], other, config);
  }
  return sum / static_cast<double>(others.size());
}

double source_conflict_combined(std::size_t j, std::span<const MassFunction> sources,
                                const MeasureConfig& config, RuleId combiner) {
  const auto others = others_of(j, sources);
  if (others.size() == 1) {
    return pairwise_conflict(sources[j], others.front(), config);
  }
  const MassFunction merged = combine(combiner, others);
  return pairwise_conflict(sources[j], merged, config);
}

ConflictReport make_conflict_report(std::span<const MassFunction> sources,
                                    const MeasureConfig& config, SourceConflictMethod method,
                                    RuleId combiner) {
  if (sources.size() < 2) {
    throw validation_error("a conflict report needs at least two sources");
  }
  ConflictReport report;
  report.measure = config.measure;
  report.method = method;
  report.variant = config.variant;
  report.combiner = combiner;

  const std::size_t count = sources.size();
  report.pairwise.assign(count, std::vector<double>(count, 0.0));
  for (std::size_t i = 0; i < count; ++i) {
    report.pairwise[i][i] = pairwise_conflict(sources[i], sources[i], config);
    for (std::size_t j = i + 1; j < count; ++j) {
      const double value = pairwise_conflict(sources[i], sources[j], config);
      report.pairwise[i][j] = value;
      report.pairwise[j][i] = value;
    }
  }

  report.per_source.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    report.per_source[j] = method == SourceConflictMethod::average
                               ? source_conflict_average(j, sources, config)
                               : source_conflict_combined(j, sources, config, combiner);
  }
  return report;
}

} // namespace beliefs
