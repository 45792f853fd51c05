#include "beliefs/mass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "beliefs/rng.hpp"

namespace beliefs {

namespace {

constexpr double zero_mass_tolerance = 1e-12;

void check_sum(double sum, double tolerance) {
  if (std::abs(sum - 1.0) > tolerance) {
    throw validation_error("masses must sum to 1, got " + std::to_string(sum));
  }
}

// In-place superset sum: v[X] <- sum over Y >= X of v[Y].
void superset_zeta(std::vector<double>& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (!(x & bit)) v[x] += v[x | bit];
    }
  }
}

// Inverse of superset_zeta: v[X] <- alternating sum over Y >= X of v[Y].
void superset_moebius(std::vector<double>& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (!(x & bit)) v[x] -= v[x | bit];
    }
  }
}

MassFunction mass_from_dense(const Frame& frame, const std::vector<double>& values) {
  std::map<std::uint32_t, double> focals;
  for (std::size_t x = 0; x < values.size(); ++x) {
    const double v = values[x];
    if (v < -zero_mass_tolerance) {
      throw computation_error("combination produced negative mass " + std::to_string(v));
    }
    if (v > zero_mass_tolerance) {
      focals.emplace(static_cast<std::uint32_t>(x), v);
    }
  }
  return MassFunction::from_focal_masses(frame, std::move(focals));
}

} // namespace

MassFunction::MassFunction(Frame frame, std::span<const std::pair<Subset, double>> assignments,
                           double tolerance)
    : frame_(std::move(frame)) {
  double sum = 0.0;
  for (const auto& [subset, mass] : assignments) {
    require_same_frame(subset.frame(), frame_);
    if (mass < 0.0) {
      throw validation_error("negative mass " + std::to_string(mass));
    }
    if (mass == 0.0) continue;
    focals_[subset.bits()] += mass;
    sum += mass;
  }
  check_sum(sum, tolerance);
}

MassFunction MassFunction::from_focal_masses(Frame frame, std::map<std::uint32_t, double> masses,
                                             double tolerance) {
  const auto full = frame.full_bits();
  double sum = 0.0;
  for (auto it = masses.begin(); it != masses.end();) {
    if (it->first > full) {
      throw validation_error("focal bits exceed the frame");
    }
    if (it->second < -zero_mass_tolerance) {
      throw validation_error("negative mass " + std::to_string(it->second));
    }
    if (it->second <= zero_mass_tolerance) {
      it = masses.erase(it);
    } else {
      sum += it->second;
      ++it;
    }
  }
  check_sum(sum, tolerance);
  return MassFunction(std::move(frame), std::move(masses));
}

MassFunction MassFunction::vacuous(Frame frame) {
  std::map<std::uint32_t, double> focals{{frame.full_bits(), 1.0}};
  return MassFunction(std::move(frame), std::move(focals));
}

MassFunction MassFunction::categorical(const Subset& a) {
  std::map<std::uint32_t, double> focals{{a.bits(), 1.0}};
  return MassFunction(a.frame(), std::move(focals));
}

MassFunction MassFunction::simple(const Subset& a, double w) {
  if (a.is_universe()) {
    throw validation_error("a simple mass function needs a strict subset; use vacuous()");
  }
  if (w < 0.0 || w > 1.0) {
    throw validation_error("simple mass weight must lie in [0,1]");
  }
  std::map<std::uint32_t, double> focals;
  if (w > 0.0) focals.emplace(a.bits(), w);
  if (w < 1.0) focals.emplace(a.frame().full_bits(), 1.0 - w);
  return MassFunction(a.frame(), std::move(focals));
}

double MassFunction::mass(const Subset& a) const {
  require_same_frame(a.frame(), frame_);
  return mass_bits(a.bits());
}

double MassFunction::mass_bits(std::uint32_t bits) const {
  const auto it = focals_.find(bits);
  return it == focals_.end() ? 0.0 : it->second;
}

std::vector<std::pair<Subset, double>> MassFunction::focal_elements() const {
  std::vector<std::pair<Subset, double>> out;
  out.reserve(focals_.size());
  for (const auto& [bits, mass] : focals_) {
    out.emplace_back(Subset(frame_, bits), mass);
  }
  return out;
}

double MassFunction::bel(const Subset& x) const {
  require_same_frame(x.frame(), frame_);
  double sum = 0.0;
  for (const auto& [bits, mass] : focals_) {
    if (bits != 0 && (bits & ~x.bits()) == 0) sum += mass;
  }
  return sum;
}

double MassFunction::pl(const Subset& x) const {
  require_same_frame(x.frame(), frame_);
  double sum = 0.0;
  for (const auto& [bits, mass] : focals_) {
    if (bits & x.bits()) sum += mass;
  }
  return sum;
}

double MassFunction::betp(const Subset& x) const {
  require_same_frame(x.frame(), frame_);
  const double open = 1.0 - mass_on_empty();
  if (open <= 0.0) {
    throw computation_error("pignistic transform undefined: all mass on the empty set");
  }
  double sum = 0.0;
  for (const auto& [bits, mass] : focals_) {
    if (bits == 0) continue;
    const auto shared = std::popcount(bits & x.bits());
    if (shared) {
      sum += static_cast<double>(shared) / static_cast<double>(std::popcount(bits)) * mass;
    }
  }
  return sum / open;
}

double MassFunction::commonality(const Subset& x) const {
  require_same_frame(x.frame(), frame_);
  double sum = 0.0;
  for (const auto& [bits, mass] : focals_) {
    if ((x.bits() & ~bits) == 0) sum += mass;
  }
  return sum;
}

bool MassFunction::is_consonant() const {
  std::vector<std::uint32_t> keys;
  keys.reserve(focals_.size());
  for (const auto& [bits, mass] : focals_) keys.push_back(bits);
  std::sort(keys.begin(), keys.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i - 1] & ~keys[i]) return false;
  }
  return true;
}

MassFunction MassFunction::discounted(double alpha) const {
  if (alpha < 0.0 || alpha > 1.0) {
    throw validation_error("discount factor must lie in [0,1]");
  }
  const auto full = frame_.full_bits();
  std::map<std::uint32_t, double> out;
  for (const auto& [bits, mass] : focals_) {
    if (bits == full) continue;
    if (alpha > 0.0) out.emplace(bits, alpha * mass);
  }
  const double on_full = 1.0 - alpha * (1.0 - mass_bits(full));
  if (on_full > 0.0) out.emplace(full, on_full);
  return from_focal_masses(frame_, std::move(out));
}

bool MassFunction::almost_equal(const MassFunction& other, double tolerance) const {
  if (frame_ != other.frame_) return false;
  for (const auto& [bits, mass] : focals_) {
    if (std::abs(mass - other.mass_bits(bits)) > tolerance) return false;
  }
  for (const auto& [bits, mass] : other.focals_) {
    if (std::abs(mass - mass_bits(bits)) > tolerance) return false;
  }
  return true;
}

WeightFunction::WeightFunction(Frame frame, std::map<std::uint32_t, double> weights)
    : frame_(std::move(frame)) {
  const auto full = frame_.full_bits();
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->first > full) {
      throw validation_error("weight bits exceed the frame");
    }
    if (it->first == full) {
      throw validation_error("the full frame carries no decomposition weight");
    }
    if (!(it->second > 0.0)) {
      throw validation_error("decomposition weights must be positive");
    }
    if (std::abs(it->second - 1.0) <= 1e-12) {
      it = weights.erase(it);
    } else {
      ++it;
    }
  }
  weights_ = std::move(weights);
}

double WeightFunction::weight(const Subset& a) const {
  require_same_frame(a.frame(), frame_);
  return weight_bits(a.bits());
}

double WeightFunction::weight_bits(std::uint32_t bits) const {
  const auto it = weights_.find(bits);
  return it == weights_.end() ? 1.0 : it->second;
}

WeightFunction canonical_decomposition(const MassFunction& m) {
  if (m.is_dogmatic()) {
    throw computation_error("canonical decomposition requires mass on the full frame");
  }
  const auto& frame = m.frame();
  const std::size_t count = frame.subset_count();

  std::vector<double> values(count, 0.0);
  for (const auto& [bits, mass] : m.focals()) values[bits] = mass;
  superset_zeta(values, frame.size());

  // values now holds commonalities; q >= m(frame) > 0, so logs are finite.
  for (auto& q : values) q = std::log(q);
  superset_moebius(values, frame.size());

  std::map<std::uint32_t, double> weights;
  for (std::uint32_t bits = 0; bits + 1 < count; ++bits) {
    const double w = std::exp(-values[bits]);
    if (std::abs(w - 1.0) > 1e-12) {
      weights.emplace(bits, w);
    }
  }
  return WeightFunction(frame, std::move(weights));
}

MassFunction mass_from_weights(const WeightFunction& w) {
  const auto& frame = w.frame();
  const std::size_t count = frame.subset_count();
  std::vector<double> q(count, 1.0);
  for (const auto& [a, weight] : w.entries()) {
    for (std::size_t x = 0; x < count; ++x) {
      if (x & ~static_cast<std::size_t>(a)) q[x] *= weight;
    }
  }
  superset_moebius(q, frame.size());
  return mass_from_dense(frame, q);
}

MassFunction random_mass(const Frame& frame, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_mass(frame, k, gen);
}

MassFunction random_mass(const Frame& frame, std::size_t k, std::mt19937_64& gen) {
  const std::size_t candidates = frame.subset_count() - 1;
  if (k < 1 || k > candidates) {
    throw validation_error("focal count must lie in [1, 2^n - 1]");
  }

  // Partial Fisher-Yates over the non-empty subsets.
  std::vector<std::uint32_t> pool(candidates);
  std::iota(pool.begin(), pool.end(), 1u);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + rng::uniform_below(gen, candidates - i);
    std::swap(pool[i], pool[j]);
  }

  // Uniform simplex masses from sorted-uniform gaps.
  std::vector<double> cuts(k - 1);
  for (auto& c : cuts) c = rng::uniform01(gen);
  std::sort(cuts.begin(), cuts.end());

  std::map<std::uint32_t, double> focals;
  double prev = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double next = (i + 1 < k) ? cuts[i] : 1.0;
    focals[pool[i]] += next - prev;
    prev = next;
  }
  return MassFunction::from_focal_masses(frame, std::move(focals));
}

} // namespace beliefs
