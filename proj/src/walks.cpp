#include "wordavoid/walks.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "wordavoid/errors.hpp"

namespace wordavoid {

StepDistribution::StepDistribution(std::map<int, Rational> probs) {
  Rational total = 0;
  for (auto& [step, p] : probs) {
    if (step < 1) {
      throw InvalidArgument("step sizes must be positive, got " +
                            std::to_string(step));
    }
    if (p < 0) {
      throw InvalidArgument("negative probability for step " +
                            std::to_string(step));
    }
    if (p != 0) {
      probs_.emplace(step, p);
      total += p;
    }
  }
  if (probs_.empty()) {
    throw InvalidArgument("step distribution has empty support");
  }
  if (total != 1) {
    throw InvalidArgument("step probabilities sum to " + to_string(total) +
                          ", not 1");
  }
}

StepDistribution StepDistribution::die() {
  std::map<int, Rational> probs;
  for (int i = 1; i <= 6; ++i) {
    probs[i] = Rational(1, 6);
  }
  return StepDistribution(std::move(probs));
}

StepDistribution StepDistribution::two_dice() {
  std::map<int, Rational> probs;
  for (int i = 2; i <= 12; ++i) {
    probs[i] = Rational(6 - std::abs(i - 7), 36);
    probs[i].canonicalize();
  }
  return StepDistribution(std::move(probs));
}

StepDistribution StepDistribution::parse(std::string_view text) {
  if (text == "die1") {
    return die();
  }
  if (text == "dice2") {
    return two_dice();
  }
  std::map<int, Rational> probs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidArgument("expected step:probability, got '" +
                            std::string(item) + "'");
    }
    int step = 0;
    const auto step_text = item.substr(0, colon);
    auto [ptr, ec] = std::from_chars(step_text.data(),
                                     step_text.data() + step_text.size(), step);
    if (ec != std::errc() || ptr != step_text.data() + step_text.size()) {
      throw InvalidArgument("bad step size '" + std::string(step_text) + "'");
    }
    if (probs.count(step) != 0) {
      throw InvalidArgument("step " + std::to_string(step) + " given twice");
    }
    probs[step] = parse_rational(item.substr(colon + 1));
    if (comma == std::string_view::npos) {
      break;
    }
    text = text.substr(comma + 1);
  }
  return StepDistribution(std::move(probs));
}

Rational StepDistribution::probability(int step) const {
  auto it = probs_.find(step);
  return it == probs_.end() ? Rational(0) : it->second;
}

Rational StepDistribution::mean() const {
  Rational mu = 0;
  for (const auto& [step, p] : probs_) {
    mu += step * p;
  }
  return mu;
}

Polynomial StepDistribution::step_polynomial() const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(max_step()) + 1);
  for (const auto& [step, p] : probs_) {
    coeffs[static_cast<std::size_t>(step)] = p;
  }
  return Polynomial(std::move(coeffs));
}

HitSeries::HitSeries(StepDistribution dist)
    : dist_(std::move(dist)), values_{Rational(1)} {}

const Rational& HitSeries::operator[](std::size_t m) {
  while (values_.size() <= m) {
    const std::size_t next = values_.size();
    Rational acc = 0;
    for (const auto& [step, p] : dist_.probs()) {
      const auto s = static_cast<std::size_t>(step);
      if (s <= next) {
        acc += p * values_[next - s];
      }
    }
    values_.push_back(acc);
  }
  return values_[m];
}

Rational p_hit(const StepDistribution& dist, std::size_t m) {
  HitSeries series(dist);
  return series[m];
}

RationalFunction hit_gf(const StepDistribution& dist) {
  return RationalFunction(Polynomial::constant(1),
                          Polynomial::constant(1) - dist.step_polynomial());
}

Rational asymptotic_hit(const StepDistribution& dist) {
  return 1 / dist.mean();
}

StepDistribution two_dice_distribution() { return StepDistribution::two_dice(); }

}  // namespace wordavoid
