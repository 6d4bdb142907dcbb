#ifndef WORDAVOID_SOLVER_HPP
#define WORDAVOID_SOLVER_HPP

#include <string>
#include <vector>

#include "wordavoid/core_types.hpp"
#include "wordavoid/linear_system.hpp"
#include "wordavoid/rational_function.hpp"

namespace wordavoid {

/// Square system over Q(z) for F and one F_H per forbidden word.
///
/// Row 0 is the counting row (1 - W(z)) F + sum_H F_H = 1, where W is the
/// alphabet weight enumerator. Row j >= 1 belongs to forbidden word H_j:
/// F - sum_G w(G H_j)_z F_G = 0. Column 0 is F, column g >= 1 is F_{G_g}.
struct AvoidanceSystem {
  RfMatrix matrix;
  RfVector rhs;
  std::vector<std::string> labels;
};

/// F(z) and F_H(z) for every forbidden word, in pattern-set order. Each is a
/// series in 1/z: coefficient of z^-n counts weight-n strings.
struct GeneratingFunctionSet {
  RationalFunction f;
  std::vector<RationalFunction> f_patterns;
};

struct SystemOptions {
  /// Call reduce() first instead of rejecting a non-reduced set.
  bool auto_reduce = false;
};

/// W(z) = sum over letters of z^-weight. 1/(z-1) for compositions.
RationalFunction alphabet_weight_enumerator(const WeightedAlphabet& alphabet);

/// Throws NotReducedError for non-reduced sets (unless auto-reducing) and
/// InvalidArgument when `set` is over a different alphabet.
AvoidanceSystem build_system(const WeightedAlphabet& alphabet,
                             const PatternSet& set, SystemOptions options = {});

/// Clears row denominators, then solves exactly. Throws SingularMatrixError.
GeneratingFunctionSet solve(const AvoidanceSystem& system);

/// Power-series coefficients c_0..c_N of num(x)/den(x) around x = 0, by the
/// recurrence den_0 c_n = num_n - sum_{k>=1} den_k c_{n-k}. Requires
/// den(0) != 0.
std::vector<Rational> taylor_coefficients(const Polynomial& num,
                                          const Polynomial& den,
                                          std::size_t n_max);

/// Coefficients of z^0, z^-1, ..., z^-N of f. Throws InvalidArgument when
/// deg num > deg den.
std::vector<Rational> series(const RationalFunction& f, std::size_t n_max);

/// build_system + solve + series, checked to be nonnegative integers.
std::vector<BigInt> count_avoiding(const PatternSet& set, std::size_t n_max,
                                   SystemOptions options = {});

}  // namespace wordavoid

#endif  // WORDAVOID_SOLVER_HPP
