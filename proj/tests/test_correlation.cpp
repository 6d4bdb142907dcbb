#include <random>

#include "doctest.h"
#include "support/reference.hpp"
#include "wordavoid/correlation.hpp"
#include "wordavoid/errors.hpp"

using namespace wordavoid;

namespace {

const WeightedAlphabet kComps = WeightedAlphabet::compositions();

Word comp(std::initializer_list<int> parts) {
  std::vector<Letter> letters;
  for (int p : parts) letters.push_back(Letter{p});
  return Word(kComps, std::move(letters));
}

Word chars(const WeightedAlphabet& alphabet, std::string_view s) {
  std::vector<std::string> symbols;
  for (char c : s) symbols.emplace_back(1, c);
  return Word::parse(alphabet, symbols);
}

WeightedCorrelation wc(std::vector<Weight> weights) { return {std::move(weights)}; }

}  // namespace

TEST_CASE("correlation bits") {
  const auto ab = WeightedAlphabet::unit("ab");
  const auto bits = correlate(chars(ab, "ababba"), chars(ab, "abbab"));
  CHECK(bits.to_string() == "001001");
  CHECK(correlation_poly(bits) == Polynomial{1, 0, 0, 1});

  const auto abcd = WeightedAlphabet::unit("abcd");
  const auto disjoint = correlate(chars(abcd, "abab"), chars(abcd, "cd"));
  CHECK(disjoint.to_string() == "0000");
  CHECK(correlation_poly(disjoint).is_zero());

  const auto self = correlate(comp({1, 1}), comp({1, 1}));
  CHECK(self.to_string() == "11");
  CHECK(correlation_poly(self) == Polynomial{1, 1});

  // H shorter than the overlap window cannot match there.
  CHECK(correlate(chars(ab, "aaa"), chars(ab, "a")).to_string() == "001");
  CHECK_THROWS_AS(correlate(Word(), chars(ab, "a")), InvalidArgument);
  CHECK_THROWS_AS(correlate(chars(ab, "a"), Word()), InvalidArgument);
}

TEST_CASE("weighted correlation examples") {
  const Word a = comp({3}), b = comp({2, 1}), c = comp({1, 2}), d = comp({1, 1, 1});
  CHECK(weighted_correlate(d, d, kComps) == wc({1, 2, 3}));
  CHECK(weighted_correlate(c, b, kComps) == wc({2}));
  CHECK(weighted_correlate(a, b, kComps).empty());
  CHECK(weighted_correlate(a, a, kComps) == wc({3}));
  CHECK(weighted_correlate(b, b, kComps) == wc({3}));
  CHECK(weighted_correlate(c, c, kComps) == wc({3}));
  CHECK(weighted_correlate(b, c, kComps) == wc({1}));
  CHECK(weighted_correlate(d, c, kComps) == wc({1}));
  CHECK(weighted_correlate(b, d, kComps) == wc({1}));
  // not commutative
  CHECK(weighted_correlate(b, c, kComps) != weighted_correlate(c, b, kComps));
  CHECK(weighted_correlate(d, d, kComps).to_string() == "{1,2,3}");
  CHECK(WeightedCorrelation{}.to_string() == "{}");
}

TEST_CASE("weighted correlation polynomial") {
  CHECK(weighted_correlation_poly(wc({1, 2, 3})) == Polynomial{0, 1, 1, 1});
  CHECK(weighted_correlation_poly(wc({})).is_zero());
  CHECK(weighted_correlation_poly(wc({1, 1})) == Polynomial{0, 2});
}

TEST_CASE("weighted correlation table for the compositions of 3") {
  const std::vector<Word> s{comp({3}), comp({2, 1}), comp({1, 2}), comp({1, 1, 1})};
  const Polynomial zero;
  const Polynomial z{0, 1}, z2{0, 0, 1}, z3{0, 0, 0, 1}, d{0, 1, 1, 1};
  // row H, column G holds w(GH)_z
  const std::vector<std::vector<Polynomial>> table{
      {z3, zero, zero, zero},
      {zero, z3, z2, zero},
      {zero, z, z3, z},
      {zero, z, zero, d},
  };
  for (std::size_t h = 0; h < 4; ++h) {
    for (std::size_t g = 0; g < 4; ++g) {
      CAPTURE(h);
      CAPTURE(g);
      CHECK(weighted_correlation_poly(weighted_correlate(s[g], s[h], kComps)) ==
            table[h][g]);
    }
  }
}

TEST_CASE("correlation laws on random words") {
  std::mt19937 rng(99);
  const auto alphabet = WeightedAlphabet::unit("abc");
  const auto weighted = WeightedAlphabet::finite({{"a", 1}, {"b", 3}, {"c", 2}});
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::int64_t> letter(0, 1);  // small alphabet use
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> gl(len(rng)), hl(len(rng));
    for (auto& l : gl) l = Letter{letter(rng)};
    for (auto& l : hl) l = Letter{letter(rng)};
    const Word g(alphabet, gl), h(alphabet, hl);

    CHECK(correlate(g, h).size() == g.size());
    CHECK(correlate(g, g).bits.front());

    const Polynomial unit = weighted_correlation_poly(weighted_correlate(g, h, alphabet));
    CHECK(unit == Polynomial::variable() * correlation_poly(correlate(g, h)));

    const Word gw(weighted, gl);
    const auto self = weighted_correlate(gw, gw, weighted);
    CHECK(std::count(self.weights.begin(), self.weights.end(), gw.weight()) == 1);
    for (Weight k : weighted_correlate(gw, Word(weighted, hl), weighted).weights) {
      CHECK(k >= 1);
      CHECK(k <= std::min(gw.weight(), Word(weighted, hl).weight()));
    }
  }
}
