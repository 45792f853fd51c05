#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "beliefs/mass.hpp"

namespace testutil {

using beliefs::Frame;
using beliefs::MassFunction;
using beliefs::Subset;

inline Frame omega3() { return Frame({"w1", "w2", "w3"}); }
inline Frame omega2() { return Frame({"w1", "w2"}); }

inline MassFunction make(const Frame& frame,
                         const std::vector<std::pair<std::uint32_t, double>>& focals) {
  std::vector<std::pair<Subset, double>> assignments;
  assignments.reserve(focals.size());
  for (const auto& [bits, mass] : focals) {
    assignments.emplace_back(Subset(frame, bits), mass);
  }
  return MassFunction(frame, assignments);
}

// Zadeh's two experts on {w1, w2, w3}.
inline MassFunction zadeh1() { return make(omega3(), {{0b001, 0.9}, {0b100, 0.1}}); }
inline MassFunction zadeh2() { return make(omega3(), {{0b010, 0.9}, {0b100, 0.1}}); }

inline bool near(double a, double b, double tolerance) { return std::abs(a - b) <= tolerance; }

} // namespace testutil
