#include <doctest.h>

#include <random>

#include "beliefs/reliability.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace beliefs;
using testutil::make;
using testutil::near;

TEST_CASE("reliability from conflict") {
  CHECK(near(reliability_from_conflict(0.6, 2.0), 0.8, 1e-12));
  CHECK(near(reliability_from_conflict(0.3, 1.0), 0.7, 1e-12));
  CHECK(reliability_from_conflict(0.0, 2.0) == 1.0);
  CHECK(reliability_from_conflict(1.0, 2.0) == 0.0);

  CHECK_THROWS_AS(reliability_from_conflict(0.5, 0.0), validation_error);
  CHECK_THROWS_AS(reliability_from_conflict(0.5, -1.0), validation_error);
  CHECK_THROWS_AS(reliability_from_conflict(-0.1, 1.0), validation_error);
  CHECK_THROWS_AS(reliability_from_conflict(1.1, 1.0), validation_error);

  // Non-increasing in the conflict for each shape parameter.
  for (const double lambda : {0.5, 1.0, 2.0}) {
    double previous = 1.0;
    for (int i = 0; i <= 100; ++i) {
      const double alpha = reliability_from_conflict(i / 100.0, lambda);
      CHECK(alpha <= previous + 1e-12);
      previous = alpha;
    }
  }

  // Large lambda keeps sources reliable until the conflict is severe;
  // small lambda punishes even mild conflict.
  for (const double conflict : {0.1, 0.5, 0.9}) {
    CHECK(reliability_from_conflict(conflict, 2.0) >
          reliability_from_conflict(conflict, 0.5));
  }
}

TEST_CASE("conflict-based discounting") {
  const Frame f = testutil::omega3();

  // Identical sources keep full reliability.
  const MassFunction m = random_mass(f, 3, std::uint64_t{77});
  const std::vector<MassFunction> same(3, m);
  const DiscountResult unchanged = discount_by_conflict(same);
  for (const double alpha : unchanged.profile.alphas) CHECK(alpha == 1.0);
  for (const auto& out : unchanged.discounted) CHECK(out.almost_equal(m, 1e-12));
  CHECK(unchanged.profile.provenance == "conflict-derived");

  // Zadeh's pair with a linear reliability map.
  const std::vector<MassFunction> zadeh{testutil::zadeh1(), testutil::zadeh2()};
  DiscountConfig linear;
  linear.lambda = 1.0;
  const DiscountResult weakened = discount_by_conflict(zadeh, linear);
  const double conflict =
      inclusion_distance_conflict(zadeh[0], zadeh[1], InclusionVariant::light);
  for (const double alpha : weakened.profile.alphas) {
    CHECK(near(alpha, 1.0 - conflict, 1e-12));
  }
  CHECK(weakened.discounted[0].almost_equal(zadeh[0].discounted(1.0 - conflict), 1e-12));

  // Outputs stay normalized.
  std::mt19937_64 gen(700);
  for (int i = 0; i < 20; ++i) {
    std::vector<MassFunction> sources;
    for (int s = 0; s < 3; ++s) sources.push_back(random_mass(f, 1 + (i + s) % 7, gen));
    const DiscountResult result = discount_by_conflict(sources);
    for (const auto& out : result.discounted) {
      double sum = 0.0;
      for (const auto& [bits, mass] : out.focals()) sum += mass;
      CHECK(near(sum, 1.0, 1e-9));
    }
  }

  // An outlier source earns the smallest reliability.
  const MassFunction agree1 = make(f, {{0b001, 0.8}, {0b011, 0.2}});
  const MassFunction agree2 = make(f, {{0b001, 0.7}, {0b011, 0.3}});
  const MassFunction outlier = make(f, {{0b010, 0.9}, {0b110, 0.1}});
  const std::vector<MassFunction> panel{agree1, agree2, outlier};
  const DiscountResult ranked = discount_by_conflict(panel);
  CHECK(ranked.profile.alphas[2] < ranked.profile.alphas[0]);
  CHECK(ranked.profile.alphas[2] < ranked.profile.alphas[1]);

  CHECK_THROWS_AS(discount_by_conflict(std::vector<MassFunction>{m}), validation_error);
}

TEST_CASE("pignistic discount estimation") {
  const Frame f = testutil::omega3();
  const Subset w1 = Subset::singleton(f, 0);

  // A source already certain of the supported singleton keeps full weight.
  CHECK(estimate_alpha_pignistic(MassFunction::categorical(w1), w1) == 1.0);

  // Total ignorance makes the objective constant; the tie-break keeps the
  // source.
  const Frame f2 = testutil::omega2();
  CHECK(estimate_alpha_pignistic(MassFunction::vacuous(f2), Subset::singleton(f2, 0)) == 1.0);

  CHECK_THROWS_AS(estimate_alpha_pignistic(MassFunction::categorical(w1), Subset(f, 0b011)),
                  validation_error);
  CHECK_THROWS_AS(
      estimate_alpha_pignistic(MassFunction::categorical(Subset::empty_set(f)), w1),
      computation_error);

  // Closed form against the refined grid search.
  for (std::size_t n = 2; n <= 4; ++n) {
    const Frame frame = oracle::small_frame(n);
    std::mt19937_64 gen(710 + n);
    for (int i = 0; i < 35; ++i) {
      const MassFunction m = random_mass(frame, 1 + i % (frame.subset_count() - 1), gen);
      const Subset supported = Subset::singleton(frame, i % n);
      const double closed = estimate_alpha_pignistic(m, supported);
      const double grid = oracle::grid_search_alpha(m, supported);
      CHECK(near(closed, grid, 1e-6));
      CHECK(oracle::pignistic_objective(m, supported, closed) <=
            oracle::pignistic_objective(m, supported, grid) + 1e-12);
    }
  }
}
