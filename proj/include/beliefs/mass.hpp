#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "beliefs/frame.hpp"

namespace beliefs {

/// Tolerance on the sum-to-one invariant of a mass function.
inline constexpr double mass_sum_tolerance = 1e-9;

/// A basic belief assignment: strictly positive masses on focal subsets,
/// summing to one. Mass on the empty set is permitted (open world).
/// Immutable after construction; focal elements iterate in increasing
/// bitmask order.
class MassFunction {
public:
  /// Builds a mass function from (subset, mass) assignments. Masses must be
  /// non-negative; assignments on the same subset accumulate; zero-mass
  /// entries are dropped. Rejects the input if the total deviates from one
  /// by more than `tolerance`.
  MassFunction(Frame frame, std::span<const std::pair<Subset, double>> assignments,
               double tolerance = mass_sum_tolerance);

  /// Assembles a mass function from an already-keyed map; the path used by
  /// combination rules. Entries within 1e-12 of zero are dropped; anything
  /// more negative is rejected. The sum invariant is enforced, never
  /// silently repaired.
  static MassFunction from_focal_masses(Frame frame, std::map<std::uint32_t, double> masses,
                                        double tolerance = mass_sum_tolerance);

  /// Total ignorance: all mass on the full frame.
  static MassFunction vacuous(Frame frame);

  /// All mass on one subset.
  static MassFunction categorical(const Subset& a);

  /// The simple mass function with m(A) = w and the rest on the full frame.
  /// A must be a strict subset of the frame; use vacuous() for w = 0 on
  /// the frame itself.
  static MassFunction simple(const Subset& a, double w);

  const Frame& frame() const noexcept { return frame_; }

  /// Mass of a subset; zero when not focal.
  double mass(const Subset& a) const;
  double mass_bits(std::uint32_t bits) const;
  double mass_on_empty() const { return mass_bits(0); }
  double mass_on_universe() const { return mass_bits(frame_.full_bits()); }

  const std::map<std::uint32_t, double>& focals() const noexcept { return focals_; }
  std::size_t focal_count() const noexcept { return focals_.size(); }
  std::vector<std::pair<Subset, double>> focal_elements() const;

  /// Credibility: sum of masses of the non-empty subsets of X.
  double bel(const Subset& x) const;

  /// Plausibility: sum of masses of the subsets meeting X.
  double pl(const Subset& x) const;

  /// Pignistic probability of X. Undefined when all mass sits on the
  /// empty set.
  double betp(const Subset& x) const;

  /// Commonality: sum of masses of the supersets of X.
  double commonality(const Subset& x) const;

  /// True when the focal elements form a chain under inclusion.
  bool is_consonant() const;

  /// True when the full frame carries no mass.
  bool is_dogmatic() const { return mass_on_universe() == 0.0; }

  bool is_vacuous() const {
    return focals_.size() == 1 && focals_.begin()->first == frame_.full_bits();
  }

  /// Reliability discounting: scales every mass by alpha and moves the
  /// remainder onto the full frame.
  MassFunction discounted(double alpha) const;

  /// Equality of focal structure within `tolerance` per focal element.
  bool almost_equal(const MassFunction& other, double tolerance) const;

private:
  MassFunction(Frame frame, std::map<std::uint32_t, double> focals)
      : frame_(std::move(frame)), focals_(std::move(focals)) {}

  Frame frame_;
  std::map<std::uint32_t, double> focals_;
};

/// Canonical-decomposition weights w(A) for strict subsets A of the frame.
/// Absent entries mean w(A) = 1; stored weights are positive and may exceed
/// one. The weight is the mass a simple component retains on the full frame:
/// the component for (A, w) is the generalized simple bba with m(A) = 1 - w,
/// m(frame) = w, so conjunctively combining components multiplies weights.
class WeightFunction {
public:
  WeightFunction(Frame frame, std::map<std::uint32_t, double> weights);

  const Frame& frame() const noexcept { return frame_; }
  double weight(const Subset& a) const;
  double weight_bits(std::uint32_t bits) const;

  /// Stored entries only (weights different from one), keyed by bitmask.
  const std::map<std::uint32_t, double>& entries() const noexcept { return weights_; }

private:
  Frame frame_;
  std::map<std::uint32_t, double> weights_;
};

/// Canonical decomposition of a non-dogmatic mass function into simple
/// components: w(A) is the alternating product of commonalities over the
/// supersets of A. Rejects dogmatic inputs.
WeightFunction canonical_decomposition(const MassFunction& m);

/// Conjunctive recombination of simple components: commonalities multiply,
/// and the mass function is recovered by Moebius inversion. Inverse of
/// canonical_decomposition.
MassFunction mass_from_weights(const WeightFunction& w);

/// Draws k distinct non-empty focal elements uniformly without replacement
/// and masses uniformly from the simplex. Deterministic given the seed.
MassFunction random_mass(const Frame& frame, std::size_t k, std::uint64_t seed);
MassFunction random_mass(const Frame& frame, std::size_t k, std::mt19937_64& gen);

} // namespace beliefs
