#ifndef WORDAVOID_WALKS_HPP
#define WORDAVOID_WALKS_HPP

#include <map>
#include <string_view>
#include <vector>

#include "wordavoid/rational.hpp"
#include "wordavoid/rational_function.hpp"

namespace wordavoid {

/// Step-size distribution of a one-sided random walk on squares 0, 1, 2, ...
class StepDistribution {
 public:
  /// Throws InvalidArgument for negative probabilities, steps < 1, an empty
  /// support or a total different from 1. Zero entries are dropped.
  explicit StepDistribution(std::map<int, Rational> probs);

  /// A fair six-sided die.
  static StepDistribution die();
  /// The sum of two fair dice: p_i = (6 - |i - 7|) / 36 for 2 <= i <= 12.
  static StepDistribution two_dice();
  /// "die1", "dice2", or "i:p/q,i:p/q,...".
  static StepDistribution parse(std::string_view text);

  const std::map<int, Rational>& probs() const { return probs_; }
  Rational probability(int step) const;
  int max_step() const { return probs_.rbegin()->first; }
  Rational mean() const;

  /// p(z) = sum_i p_i z^i.
  Polynomial step_polynomial() const;

 private:
  std::map<int, Rational> probs_;
};

/// P(0), P(1), ... grown on demand from P(m) = sum_i p_i P(m - i).
class HitSeries {
 public:
  explicit HitSeries(StepDistribution dist);

  const Rational& operator[](std::size_t m);
  const std::vector<Rational>& values() const { return values_; }
  const StepDistribution& distribution() const { return dist_; }

 private:
  StepDistribution dist_;
  std::vector<Rational> values_;
};

/// Probability that the walk lands on square m.
Rational p_hit(const StepDistribution& dist, std::size_t m);

/// g(z) = sum_m P(m) z^m = 1 / (1 - p(z)), a power series in z.
RationalFunction hit_gf(const StepDistribution& dist);

/// lim P(m) = 1 / mean step.
Rational asymptotic_hit(const StepDistribution& dist);

StepDistribution two_dice_distribution();

}  // namespace wordavoid

#endif  // WORDAVOID_WALKS_HPP
