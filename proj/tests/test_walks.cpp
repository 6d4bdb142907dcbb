#include <random>

#include "doctest.h"
#include "wordavoid/errors.hpp"
#include "wordavoid/solver.hpp"
#include "wordavoid/walks.hpp"

using namespace wordavoid;

namespace {

StepDistribution random_distribution(std::mt19937& rng) {
  std::uniform_int_distribution<int> support(1, 5);
  std::uniform_int_distribution<int> step(1, 9);
  std::uniform_int_distribution<long> mass(1, 20);
  std::map<int, Rational> raw;
  const int k = support(rng);
  while (static_cast<int>(raw.size()) < k) {
    raw[step(rng)] = mass(rng);
  }
  Rational total = 0;
  for (const auto& [s, p] : raw) total += p;
  for (auto& [s, p] : raw) p /= total;
  return StepDistribution(raw);
}

// (1 - z) g(z) at z = 1 after cancelling the common factor.
Rational residue_at_one(const StepDistribution& dist) {
  const RationalFunction scaled = hit_gf(dist) * RationalFunction(Polynomial{1, -1});
  return scaled(Rational(1));
}

}  // namespace

TEST_CASE("hit probabilities") {
  const auto die = StepDistribution::die();
  CHECK(p_hit(die, 0) == 1);
  CHECK(p_hit(die, 1) == Rational(1, 6));
  CHECK(p_hit(die, 2) == Rational(7, 36));
  CHECK(p_hit(StepDistribution({{1, Rational(1)}}), 0) == 1);
  CHECK(p_hit(StepDistribution::two_dice(), 1) == 0);

  HitSeries series(die);
  CHECK(series[6] == p_hit(die, 6));
  for (const auto& v : series.values()) {
    CHECK(v >= 0);
    CHECK(v <= 1);
  }
}

TEST_CASE("hit generating function") {
  const auto die = StepDistribution::die();
  const Rational s(1, 6);
  const Polynomial den(std::vector<Rational>{1, -s, -s, -s, -s, -s, -s});
  CHECK(hit_gf(die) == RationalFunction(Polynomial{1}, den));

  CHECK(hit_gf(StepDistribution({{1, Rational(1)}})) ==
        RationalFunction(Polynomial{1}, Polynomial{1, -1}));
  const StepDistribution coin({{1, Rational(1, 2)}, {2, Rational(1, 2)}});
  const Rational h(1, 2);
  CHECK(hit_gf(coin) ==
        RationalFunction(Polynomial{1}, Polynomial(std::vector<Rational>{1, -h, -h})));
}

TEST_CASE("series of g matches the recurrence") {
  std::mt19937 rng(8);
  std::vector<StepDistribution> dists{StepDistribution::die(), StepDistribution::two_dice(),
                                      StepDistribution({{1, Rational(1, 2)}, {2, Rational(1, 2)}})};
  for (int i = 0; i < 4; ++i) dists.push_back(random_distribution(rng));
  for (const auto& dist : dists) {
    const auto g = hit_gf(dist);
    const auto coeffs = taylor_coefficients(g.num(), g.den(), 30);
    HitSeries hits(dist);
    for (std::size_t m = 0; m <= 30; ++m) {
      CHECK(coeffs[m] == hits[m]);
    }
  }
}

TEST_CASE("asymptotic hit probability") {
  CHECK(asymptotic_hit(StepDistribution::die()) == Rational(2, 7));
  CHECK(asymptotic_hit(StepDistribution::two_dice()) == Rational(1, 7));
  CHECK(asymptotic_hit(StepDistribution({{1, Rational(1)}})) == 1);
  CHECK(1 - asymptotic_hit(StepDistribution::die()) == Rational(5, 7));
}

TEST_CASE("two dice") {
  const auto dice = two_dice_distribution();
  CHECK(dice.probability(7) == Rational(1, 6));
  CHECK(dice.probability(2) == Rational(1, 36));
  CHECK(dice.probability(1) == 0);
  Rational total = 0;
  for (const auto& [s, p] : dice.probs()) total += p;
  CHECK(total == 1);
  CHECK(dice.max_step() == 12);
}

TEST_CASE("convergence for one die") {
  const auto die = StepDistribution::die();
  const Rational limit(2, 7);
  HitSeries hits(die);
  std::vector<Rational> err;
  for (std::size_t m = 0; m <= 110; ++m) err.push_back(abs(hits[m] - limit));
  for (std::size_t m = 60; m <= 110; ++m) {
    CHECK(err[m] < Rational(1, 1000000));
  }
  // The error oscillates, but its maximum over any window of six
  // consecutive squares never grows.
  auto window_max = [&err](std::size_t m) {
    Rational best = err[m];
    for (std::size_t k = 1; k < 6; ++k) best = std::max(best, err[m + k]);
    return best;
  };
  for (std::size_t m = 20; m < 100; ++m) {
    CHECK(window_max(m + 1) <= window_max(m));
  }
  CHECK(1 - hits[110] - Rational(5, 7) < Rational(1, 1000000));
}

TEST_CASE("residue at z = 1 is the inverse mean") {
  std::mt19937 rng(21);
  CHECK(residue_at_one(StepDistribution::die()) == Rational(2, 7));
  CHECK(residue_at_one(StepDistribution::two_dice()) == Rational(1, 7));
  for (int i = 0; i < 5; ++i) {
    const auto dist = random_distribution(rng);
    CHECK(residue_at_one(dist) == asymptotic_hit(dist));
  }
}

TEST_CASE("distribution validation and parsing") {
  CHECK_THROWS_AS(StepDistribution({{1, Rational(1, 2)}}), InvalidArgument);
  CHECK_THROWS_AS(StepDistribution({{0, Rational(1)}}), InvalidArgument);
  CHECK_THROWS_AS(StepDistribution({{1, Rational(3, 2)}, {2, Rational(-1, 2)}}),
                  InvalidArgument);
  CHECK_THROWS_AS(StepDistribution({}), InvalidArgument);

  CHECK(StepDistribution::parse("die1").probs() == StepDistribution::die().probs());
  CHECK(StepDistribution::parse("dice2").probs() == StepDistribution::two_dice().probs());
  const auto coin = StepDistribution::parse("1:1/2,3:1/2");
  CHECK(coin.mean() == 2);
  CHECK_THROWS_AS(StepDistribution::parse("1:1/2,2:1/3"), InvalidArgument);
  CHECK_THROWS_AS(StepDistribution::parse("1:1/2,1:1/2"), InvalidArgument);
  CHECK_THROWS_AS(StepDistribution::parse("x:1"), InvalidArgument);
  CHECK_THROWS_AS(StepDistribution::parse("1"), InvalidArgument);
}
