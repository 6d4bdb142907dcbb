#include "wordavoid/solver.hpp"

#include <algorithm>

#include "wordavoid/correlation.hpp"
#include "wordavoid/errors.hpp"

namespace wordavoid {

RationalFunction alphabet_weight_enumerator(const WeightedAlphabet& alphabet) {
  if (alphabet.is_compositions()) {
    return RationalFunction(Polynomial::constant(1), Polynomial{-1, 1});
  }
  Weight max_weight = 0;
  for (const auto& entry : alphabet.letters()) {
    max_weight = std::max(max_weight, entry.weight);
  }
  // sum z^-w = (sum z^(max - w)) / z^max
  Polynomial num;
  for (const auto& entry : alphabet.letters()) {
    num += Polynomial::monomial(
        1, static_cast<std::size_t>(max_weight - entry.weight));
  }
  return RationalFunction(
      std::move(num),
      Polynomial::monomial(1, static_cast<std::size_t>(max_weight)));
}

AvoidanceSystem build_system(const WeightedAlphabet& alphabet,
                             const PatternSet& input, SystemOptions options) {
  if (!(input.alphabet() == alphabet)) {
    throw InvalidArgument("pattern set is over a different alphabet");
  }
  const PatternSet set = options.auto_reduce ? reduce(input) : input;
  require_reduced(set);

  const std::size_t t = set.size();
  AvoidanceSystem system;
  system.matrix.assign(t + 1, RfVector(t + 1));
  system.rhs.assign(t + 1, RationalFunction());
  system.labels.push_back("F");
  for (const auto& word : set.words()) {
    system.labels.push_back("F_" + word.to_string(alphabet));
  }

  system.matrix[0][0] =
      RationalFunction(1) - alphabet_weight_enumerator(alphabet);
  for (std::size_t g = 1; g <= t; ++g) {
    system.matrix[0][g] = 1;
  }
  system.rhs[0] = 1;

  for (std::size_t h = 1; h <= t; ++h) {
    system.matrix[h][0] = 1;
    for (std::size_t g = 1; g <= t; ++g) {
      const auto wc = weighted_correlate(set[g - 1], set[h - 1], alphabet);
      system.matrix[h][g] = -weighted_correlation_poly(wc);
    }
  }
  return system;
}

GeneratingFunctionSet solve(const AvoidanceSystem& system) {
  RfMatrix matrix = system.matrix;
  RfVector rhs = system.rhs;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Polynomial common = Polynomial::constant(1);
    for (const auto& entry : matrix[i]) {
      if (entry.is_polynomial()) {
        continue;
      }
      common = common * entry.den().divmod(gcd(common, entry.den())).first;
    }
    if (common.degree() <= 0) {
      continue;
    }
    const RationalFunction scale(common);
    for (auto& entry : matrix[i]) {
      entry *= scale;
    }
    rhs[i] *= scale;
  }

  RfVector x = solve_linear(std::move(matrix), std::move(rhs));
  GeneratingFunctionSet out;
  out.f = x.front();
  out.f_patterns.assign(x.begin() + 1, x.end());
  return out;
}

std::vector<Rational> taylor_coefficients(const Polynomial& num,
                                          const Polynomial& den,
                                          std::size_t n_max) {
  const Rational q0 = den.coefficient(0);
  if (q0 == 0) {
    throw InvalidArgument("power series denominator vanishes at 0");
  }
  const std::size_t den_len = den.coefficients().size();
  std::vector<Rational> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc = num.coefficient(n);
    for (std::size_t k = 1; k <= n && k < den_len; ++k) {
      acc -= den.coefficients()[k] * out[n - k];
    }
    out[n] = acc / q0;
  }
  return out;
}

std::vector<Rational> series(const RationalFunction& f, std::size_t n_max) {
  if (f.is_zero()) {
    return std::vector<Rational>(n_max + 1);
  }
  const int d = f.den().degree();
  if (f.num().degree() > d) {
    throw InvalidArgument(
        "series in 1/z would have positive powers of z (deg num > deg den)");
  }
  const auto reversal = static_cast<std::size_t>(d);
  return taylor_coefficients(f.num().reversed(reversal),
                             f.den().reversed(reversal), n_max);
}

std::vector<BigInt> count_avoiding(const PatternSet& set, std::size_t n_max,
                                   SystemOptions options) {
  const auto system = build_system(set.alphabet(), set, options);
  const auto gfs = solve(system);
  const auto coeffs = series(gfs.f, n_max);
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Rational& c = coeffs[n];
    if (c.get_den() != 1 || c < 0) {
      throw Error("internal error: coefficient " + std::to_string(n) +
                  " of F is " + to_string(c) +
                  ", not a nonnegative integer");
    }
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace wordavoid
