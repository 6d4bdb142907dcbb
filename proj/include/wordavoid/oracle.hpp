#ifndef WORDAVOID_ORACLE_HPP
#define WORDAVOID_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "wordavoid/core_types.hpp"

namespace wordavoid {

// Brute-force ground truth. Everything here enumerates strings directly and
// never touches the correlation or solver code.

struct OracleOptions {
  /// Largest number of candidate strings we agree to enumerate.
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// Split the enumeration over the first letter; counts do not depend on it.
  unsigned jobs = 1;
};

struct OracleCount {
  std::int64_t n = 0;
  /// Number of strings of this length (or weight).
  std::uint64_t total = 0;
  std::uint64_t avoiding = 0;
  /// Per forbidden word H: strings whose only forbidden occurrence is H at
  /// the very end.
  std::vector<std::uint64_t> per_pattern;
};

/// Length-n strings over a finite alphabet. Throws BudgetExceeded when q^n
/// exceeds the budget and InvalidArgument for the composition alphabet.
OracleCount count_strings_avoiding(const PatternSet& set, std::size_t length,
                                   const OracleOptions& options = {});

/// Weight-n strings over any weighted alphabet.
OracleCount count_weight_avoiding(const PatternSet& set, Weight n,
                                  const OracleOptions& options = {});

/// Compositions of n, i.e. weight-n strings over {1, 2, 3, ...}.
OracleCount count_compositions_avoiding(const PatternSet& set, Weight n,
                                        const OracleOptions& options = {});

/// Compositions of n with no run of consecutive parts summing to m. Uses a
/// prefix-sum window test rather than any pattern set.
std::uint64_t count_avoiding_all_of_weight(Weight m, Weight n,
                                           const OracleOptions& options = {});

/// Compositions of n none of whose prefix sums equals m. Requires 1 <= m < n.
std::uint64_t count_avoiding_initial(Weight m, Weight n,
                                     const OracleOptions& options = {});

}  // namespace wordavoid

#endif  // WORDAVOID_ORACLE_HPP
