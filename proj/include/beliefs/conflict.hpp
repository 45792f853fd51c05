#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "beliefs/combine.hpp"
#include "beliefs/mass.hpp"

namespace beliefs {

enum class InclusionVariant { strict, light };

enum class ConflictMeasure {
  distance,           // Jousselme distance
  inclusion_distance, // (1 - inclusion degree) * Jousselme distance
  plausibility_cosine,
  global_kappa, // mass the conjunctive rule leaves on the empty set
};

enum class SourceConflictMethod {
  average,  // mean pairwise conflict against the other sources
  combined, // conflict against the combination of the other sources
};

std::string_view to_string(ConflictMeasure measure);
std::string_view to_string(SourceConflictMethod method);
std::string_view to_string(InclusionVariant variant);
ConflictMeasure conflict_measure_from_string(std::string_view name);
SourceConflictMethod source_method_from_string(std::string_view name);
InclusionVariant inclusion_variant_from_string(std::string_view name);

struct MeasureConfig {
  ConflictMeasure measure = ConflictMeasure::inclusion_distance;
  InclusionVariant variant = InclusionVariant::light;
};

/// Mass the conjunctive combination of all sources puts on the empty set.
double global_conflict(std::span<const MassFunction> sources);

/// Mass on the empty set after conjunctively combining `order` copies of m.
/// Nondecreasing in the order.
double auto_conflict(const MassFunction& m, std::size_t order);

/// Jousselme distance: quadratic form of the mass difference under the
/// Jaccard similarity matrix, computed sparsely over the focal supports.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

/// One minus the cosine between the dense plausibility vectors.
double plausibility_cosine_conflict(const MassFunction& m1, const MassFunction& m2);

/// Degree of inclusion of m1 in m2: the mean inclusion indicator over focal
/// pairs (strict) or the mean best-match indicator per focal of m1 (light).
double inclusion_degree_directed(const MassFunction& m1, const MassFunction& m2,
                                 InclusionVariant variant);

/// Symmetric inclusion degree: the better of the two directions.
double inclusion_degree(const MassFunction& m1, const MassFunction& m2, InclusionVariant variant);

/// Conflict measure (1 - inclusion degree) * Jousselme distance. Satisfies
/// non-negativity, identity, symmetry, normalization and the inclusion
/// axiom.
double inclusion_distance_conflict(const MassFunction& m1, const MassFunction& m2,
                                   InclusionVariant variant = InclusionVariant::light);

/// Pairwise conflict under the configured measure.
double pairwise_conflict(const MassFunction& m1, const MassFunction& m2,
                         const MeasureConfig& config);

/// Mean pairwise conflict between source j and every other source.
double source_conflict_average(std::size_t j, std::span<const MassFunction> sources,
                               const MeasureConfig& config);

/// Conflict between source j and the combination of the other sources.
/// With two sources this is just the pairwise conflict.
double source_conflict_combined(std::size_t j, std::span<const MassFunction> sources,
                                const MeasureConfig& config, RuleId combiner = RuleId::mean);

struct ConflictReport {
  ConflictMeasure measure = ConflictMeasure::inclusion_distance;
  SourceConflictMethod method = SourceConflictMethod::average;
  InclusionVariant variant = InclusionVariant::light;
  RuleId combiner = RuleId::mean; // used by the combined method only
  std::vector<std::vector<double>> pairwise;
  std::vector<double> per_source;
};

ConflictReport make_conflict_report(std::span<const MassFunction> sources,
                                    const MeasureConfig& config,
                                    SourceConflictMethod method = SourceConflictMethod::average,
                                    RuleId combiner = RuleId::mean);

} // namespace beliefs
