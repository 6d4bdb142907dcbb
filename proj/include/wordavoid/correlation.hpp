#ifndef WORDAVOID_CORRELATION_HPP
#define WORDAVOID_CORRELATION_HPP

#include <string>
#include <vector>

#include "wordavoid/core_types.hpp"
#include "wordavoid/polynomial.hpp"

namespace wordavoid {

/// Overlap indicator of H slid under G, one bit per starting position in G
/// (leftmost first). Always |G| bits long.
struct CorrelationBits {
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  /// e.g. "001001"
  std::string to_string() const;

  friend bool operator==(const CorrelationBits&,
                         const CorrelationBits&) = default;
};

/// Multiset of overlap weights, stored sorted with repeats.
struct WeightedCorrelation {
  std::vector<Weight> weights;

  bool empty() const { return weights.empty(); }
  /// e.g. "{1,2,3}", "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const WeightedCorrelation&,
                         const WeightedCorrelation&) = default;
};

/// Bit i is set when H's prefix equals the suffix of G starting at i. H must
/// be at least as long as that suffix. Throws InvalidArgument on empty words.
CorrelationBits correlate(const Word& g, const Word& h);

/// Bit i of an L-bit correlation contributes z^(L-1-i).
Polynomial correlation_poly(const CorrelationBits& bits);

/// The weight of each matched overlap (the matched prefix of H).
WeightedCorrelation weighted_correlate(const Word& g, const Word& h,
                                       const WeightedAlphabet& alphabet);

/// Sum of z^k over the multiset.
Polynomial weighted_correlation_poly(const WeightedCorrelation& wc);

}  // namespace wordavoid

#endif  // WORDAVOID_CORRELATION_HPP
