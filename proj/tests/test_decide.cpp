#include <doctest.h>

#include <random>

#include "beliefs/combine.hpp"
#include "beliefs/decide.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace beliefs;
using testutil::make;
using testutil::near;

namespace {

MassFunction dempster_zadeh() {
  const MassFunction ms[] = {testutil::zadeh1(), testutil::zadeh2()};
  return dempster(ms);
}

} // namespace

TEST_CASE("argmax decision") {
  const Frame f = testutil::omega3();

  DecisionConfig config;
  config.functional = DecisionFunctional::betp;
  CHECK(decide_argmax(dempster_zadeh(), config).chosen == Subset(f, 0b100));

  // Also reached through the open-world conjunctive result.
  const MassFunction ms[] = {testutil::zadeh1(), testutil::zadeh2()};
  CHECK(decide_argmax(conjunctive(ms), config).chosen == Subset(f, 0b100));

  // A categorical source picks its focal element under any functional.
  const Subset a = Subset(f, 0b010);
  for (const auto functional :
       {DecisionFunctional::bel, DecisionFunctional::pl, DecisionFunctional::betp}) {
    DecisionConfig c;
    c.functional = functional;
    CHECK(decide_argmax(MassFunction::categorical(a), c).chosen == a);
  }

  // Ties break to the first singleton.
  CHECK(decide_argmax(MassFunction::vacuous(f), config).chosen == Subset(f, 0b001));

  CHECK_THROWS_AS(
      decide_argmax(MassFunction::categorical(Subset::empty_set(f)), config),
      computation_error);
}

TEST_CASE("argmax is invariant under increasing rescalings") {
  const Frame f = testutil::omega3();
  std::mt19937_64 gen(800);
  DecisionConfig config;
  config.functional = DecisionFunctional::betp;

  for (int i = 0; i < 50; ++i) {
    const MassFunction m = random_mass(f, 1 + i % 7, gen);
    const Subset chosen = decide_argmax(m, config).chosen;

    // Hand argmax over rescaled scores with the same tie-break.
    Subset best = Subset::singleton(f, 0);
    double best_score = 3.0 * m.betp(best) + 0.25;
    for (std::size_t s = 1; s < f.size(); ++s) {
      const Subset candidate = Subset::singleton(f, s);
      const double score = 3.0 * m.betp(candidate) + 0.25;
      if (score > best_score) {
        best = candidate;
        best_score = score;
      }
    }
    CHECK(chosen == best);
  }
}

TEST_CASE("appriou decision") {
  const Frame f = testutil::omega3();

  // With no cardinality penalty and uniform weights this is plain argmax.
  std::mt19937_64 gen(810);
  for (int i = 0; i < 200; ++i) {
    const MassFunction m = random_mass(f, 1 + i % 7, gen);
    DecisionConfig config;
    config.functional = DecisionFunctional::betp;
    config.rho = 0.0;
    config.scheme = DecisionScheme::appriou;
    CHECK(decide_appriou(m, config).chosen == decide_argmax(m, config).chosen);
  }

  // Two candidates, full cardinality penalty: bel(w1) = 0.4 wins against
  // bel({w1,w2}) = 0.7 halved.
  const MassFunction m = make(f, {{0b001, 0.4}, {0b010, 0.3}, {0b100, 0.3}});
  DecisionConfig config;
  config.functional = DecisionFunctional::bel;
  config.rho = 1.0;
  config.candidates = {Subset(f, 0b001), Subset(f, 0b011)};
  const DecisionResult result = decide_appriou(m, config);
  CHECK(result.chosen == Subset(f, 0b001));
  REQUIRE(result.scores.size() == 2);
  CHECK(near(result.scores[0].second, 0.4 / 1.5, 1e-12));
  CHECK(near(result.scores[1].second, 0.7 * 0.5 / 1.5, 1e-12));

  // A zero weight removes a candidate from contention.
  DecisionConfig muted = config;
  muted.rho = 0.0;
  muted.lambda_x[0b011] = 0.0;
  CHECK(decide_appriou(m, muted).chosen == Subset(f, 0b001));
  muted.lambda_x = {{0b001, 0.0}};
  CHECK(decide_appriou(m, muted).chosen == Subset(f, 0b011));

  DecisionConfig bad = config;
  bad.rho = 1.5;
  CHECK_THROWS_AS(decide_appriou(m, bad), validation_error);
  DecisionConfig all_muted = config;
  all_muted.lambda_x = {{0b001, 0.0}, {0b011, 0.0}};
  CHECK_THROWS_AS(decide_appriou(m, all_muted), validation_error);
}

TEST_CASE("distance decision") {
  const Frame f = testutil::omega3();

  // Categorical masses decide on their own focal element.
  const auto all = enumerate_subsets(f);
  DecisionConfig config;
  config.scheme = DecisionScheme::distance;
  for (const auto& x : all) {
    if (x.is_empty()) continue;
    config.candidates.clear();
    for (const auto& c : all) {
      if (!c.is_empty()) config.candidates.push_back(c);
    }
    CHECK(decide_distance(MassFunction::categorical(x), config).chosen == x);
  }

  // The Dempster-combined Zadeh pair sits on top of the w3 categorical.
  config.candidates.clear();
  CHECK(decide_distance(dempster_zadeh(), config).chosen == Subset(f, 0b100));

  // Total ignorance is closest to the full frame.
  const Frame f2 = testutil::omega2();
  DecisionConfig wide;
  wide.scheme = DecisionScheme::distance;
  for (const auto& c : enumerate_subsets(f2)) {
    if (!c.is_empty()) wide.candidates.push_back(c);
  }
  CHECK(decide_distance(MassFunction::vacuous(f2), wide).chosen == Subset::universe(f2));

  // The decision always lands in the candidate set.
  std::mt19937_64 gen(820);
  DecisionConfig pair_only;
  pair_only.scheme = DecisionScheme::distance;
  pair_only.candidates = {Subset(f, 0b011), Subset(f, 0b110)};
  for (int i = 0; i < 30; ++i) {
    const MassFunction m = random_mass(f, 1 + i % 7, gen);
    const Subset chosen = decide_distance(m, pair_only).chosen;
    CHECK((chosen == pair_only.candidates[0] || chosen == pair_only.candidates[1]));
  }
}

TEST_CASE("decision configs are validated") {
  const Frame f = testutil::omega3();
  const MassFunction m = testutil::zadeh1();

  DecisionConfig with_empty;
  with_empty.candidates = {Subset::empty_set(f)};
  CHECK_THROWS_AS(decide_argmax(m, with_empty), validation_error);

  DecisionConfig other_frame;
  other_frame.candidates = {Subset::singleton(Frame({"a", "b"}), 0)};
  CHECK_THROWS_AS(decide_argmax(m, other_frame), validation_error);

  // Dispatch honors the scheme field.
  DecisionConfig scheme;
  scheme.scheme = DecisionScheme::distance;
  CHECK(decide(dempster_zadeh(), scheme).chosen == Subset(f, 0b100));
  scheme.scheme = DecisionScheme::argmax;
  CHECK(decide(dempster_zadeh(), scheme).chosen == Subset(f, 0b100));

  CHECK(decision_scheme_from_string("appriou") == DecisionScheme::appriou);
  CHECK(decision_functional_from_string("pl") == DecisionFunctional::pl);
  CHECK_THROWS_AS(decision_scheme_from_string("x"), validation_error);
  CHECK_THROWS_AS(decision_functional_from_string("x"), validation_error);
}
