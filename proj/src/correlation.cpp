#include "wordavoid/correlation.hpp"

#include <algorithm>

#include "wordavoid/errors.hpp"

namespace wordavoid {

namespace {

void require_nonempty(const Word& g, const Word& h) {
  if (g.empty() || h.empty()) {
    throw InvalidArgument("correlation of an empty word");
  }
}

// H's prefix of length |G| - start equals G's suffix from `start`.
bool overlaps_at(const Word& g, const Word& h, std::size_t start) {
  const std::size_t len = g.size() - start;
  if (len > h.size()) {
    return false;
  }
  auto gl = g.letters();
  auto hl = h.letters();
  return std::equal(gl.begin() + static_cast<std::ptrdiff_t>(start), gl.end(),
                    hl.begin());
}

}  // namespace

std::string CorrelationBits::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) {
    out += b ? '1' : '0';
  }
  return out;
}

std::string WeightedCorrelation::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(weights[i]);
  }
  return out + "}";
}

CorrelationBits correlate(const Word& g, const Word& h) {
  require_nonempty(g, h);
  CorrelationBits out;
  out.bits.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.bits[i] = overlaps_at(g, h, i);
  }
  return out;
}

Polynomial correlation_poly(const CorrelationBits& bits) {
  std::vector<Rational> coeffs(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.bits[i]) {
      coeffs[bits.size() - 1 - i] = 1;
    }
  }
  return Polynomial(std::move(coeffs));
}

WeightedCorrelation weighted_correlate(const Word& g, const Word& h,
                                       const WeightedAlphabet& alphabet) {
  require_nonempty(g, h);
  WeightedCorrelation out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!overlaps_at(g, h, i)) {
      continue;
    }
    Weight k = 0;
    for (std::size_t j = i; j < g.size(); ++j) {
      k += alphabet.weight(g[j]);
    }
    out.weights.push_back(k);
  }
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

Polynomial weighted_correlation_poly(const WeightedCorrelation& wc) {
  if (wc.weights.empty()) {
    return {};
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(wc.weights.back()) + 1);
  for (Weight k : wc.weights) {
    coeffs[static_cast<std::size_t>(k)] += 1;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace wordavoid
