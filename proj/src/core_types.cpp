#include "wordavoid/core_types.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <set>
#include <utility>

#include "wordavoid/errors.hpp"

namespace wordavoid {

WeightedAlphabet WeightedAlphabet::compositions() {
  return WeightedAlphabet(Kind::Compositions, {});
}

WeightedAlphabet WeightedAlphabet::finite(std::vector<Entry> letters) {
  if (letters.empty()) {
    throw InvalidArgument("finite alphabet needs at least one letter");
  }
  std::set<std::string> seen;
  for (const auto& entry : letters) {
    if (entry.symbol.empty()) {
      throw InvalidArgument("alphabet symbols must be nonempty");
    }
    if (entry.weight < 1) {
      throw InvalidArgument("letter '" + entry.symbol +
                            "' has weight " + std::to_string(entry.weight) +
                            "; weights must be positive");
    }
    if (!seen.insert(entry.symbol).second) {
      throw InvalidArgument("duplicate alphabet symbol '" + entry.symbol + "'");
    }
  }
  return WeightedAlphabet(Kind::Finite, std::move(letters));
}

WeightedAlphabet WeightedAlphabet::unit(std::string_view symbols) {
  std::vector<Entry> letters;
  for (char c : symbols) {
    letters.push_back({std::string(1, c), 1});
  }
  return finite(std::move(letters));
}

bool WeightedAlphabet::contains(Letter letter) const {
  if (is_compositions()) {
    return letter.code >= 1;
  }
  return letter.code >= 0 &&
         static_cast<std::size_t>(letter.code) < letters_.size();
}

Weight WeightedAlphabet::weight(Letter letter) const {
  if (!contains(letter)) {
    throw InvalidWord("letter code " + std::to_string(letter.code) +
                      " is not in the alphabet");
  }
  if (is_compositions()) {
    return letter.code;
  }
  return letters_[static_cast<std::size_t>(letter.code)].weight;
}

Letter WeightedAlphabet::letter(std::string_view symbol) const {
  if (is_compositions()) {
    std::int64_t value = 0;
    const auto* first = symbol.data();
    const auto* last = symbol.data() + symbol.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (symbol.empty() || ec != std::errc() || ptr != last || value < 1 ||
        symbol.front() == '+' || symbol.front() == '0') {
      throw InvalidWord("'" + std::string(symbol) +
                        "' is not a positive decimal part");
    }
    return Letter{value};
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].symbol == symbol) {
      return Letter{static_cast<std::int64_t>(i)};
    }
  }
  throw InvalidWord("unknown letter '" + std::string(symbol) + "'");
}

std::string WeightedAlphabet::symbol(Letter letter) const {
  if (!contains(letter)) {
    throw InvalidWord("letter code " + std::to_string(letter.code) +
                      " is not in the alphabet");
  }
  if (is_compositions()) {
    return std::to_string(letter.code);
  }
  return letters_[static_cast<std::size_t>(letter.code)].symbol;
}

std::vector<Letter> WeightedAlphabet::letters_up_to(Weight max_weight) const {
  std::vector<Letter> out;
  if (is_compositions()) {
    for (Weight w = 1; w <= max_weight; ++w) {
      out.push_back(Letter{w});
    }
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].weight <= max_weight) {
      out.push_back(Letter{static_cast<std::int64_t>(i)});
    }
  }
  return out;
}

Word::Word(const WeightedAlphabet& alphabet, std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    weight_ += alphabet.weight(l);
  }
}

Word Word::parse(const WeightedAlphabet& alphabet,
                 const std::vector<std::string>& symbols) {
  std::vector<Letter> letters;
  letters.reserve(symbols.size());
  for (const auto& s : symbols) {
    letters.push_back(alphabet.letter(s));
  }
  return Word(alphabet, std::move(letters));
}

bool Word::contains(const Word& other) const {
  if (other.size() > size()) {
    return false;
  }
  return std::search(letters_.begin(), letters_.end(), other.letters_.begin(),
                     other.letters_.end()) != letters_.end();
}

std::vector<std::string> Word::symbols(const WeightedAlphabet& alphabet) const {
  std::vector<std::string> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    out.push_back(alphabet.symbol(l));
  }
  return out;
}

std::string Word::to_string(const WeightedAlphabet& alphabet) const {
  auto syms = symbols(alphabet);
  const bool compact =
      !alphabet.is_compositions() &&
      std::all_of(syms.begin(), syms.end(),
                  [](const std::string& s) { return s.size() == 1; });
  const char sep = alphabet.is_compositions() ? '+' : ',';
  std::string out;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (!compact && i > 0) {
      out += sep;
    }
    out += syms[i];
  }
  return out;
}

Weight word_weight(const Word& word, const WeightedAlphabet& alphabet) {
  Weight total = 0;
  for (Letter l : word.letters()) {
    total += alphabet.weight(l);
  }
  return total;
}

PatternSet::PatternSet(WeightedAlphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].empty()) {
      throw InvalidArgument("forbidden word " + std::to_string(i) +
                            " is empty");
    }
    for (Letter l : words_[i].letters()) {
      if (!alphabet_.contains(l)) {
        throw InvalidWord("forbidden word " + std::to_string(i) +
                          " uses a letter outside the alphabet");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (words_[i] == words_[j]) {
        throw NotReducedError(j, i,
                              "forbidden words " + std::to_string(j) +
                                  " and " + std::to_string(i) + " are equal (" +
                                  words_[i].to_string(alphabet_) + ")");
      }
    }
  }
}

namespace {

// First (inner, outer) pair with words[inner] inside words[outer].
std::optional<std::pair<std::size_t, std::size_t>> find_containment(
    const PatternSet& set) {
  const auto& words = set.words();
  for (std::size_t outer = 0; outer < words.size(); ++outer) {
    for (std::size_t inner = 0; inner < words.size(); ++inner) {
      if (inner != outer && words[outer].contains(words[inner])) {
        return std::pair{inner, outer};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_reduced(const PatternSet& set) {
  return !find_containment(set).has_value();
}

void require_reduced(const PatternSet& set) {
  if (auto pair = find_containment(set)) {
    const auto& a = set.alphabet();
    auto [inner, outer] = *pair;
    throw NotReducedError(
        inner, outer,
        "pattern set is not reduced: word " + std::to_string(inner) + " (" +
            set[inner].to_string(a) + ") occurs inside word " +
            std::to_string(outer) + " (" + set[outer].to_string(a) + ")");
  }
}

PatternSet reduce(const PatternSet& set) {
  const auto& words = set.words();
  std::vector<Word> kept;
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool contains_other = false;
    for (std::size_t j = 0; j < words.size() && !contains_other; ++j) {
      contains_other = j != i && words[i].contains(words[j]);
    }
    if (!contains_other) {
      kept.push_back(words[i]);
    }
  }
  return PatternSet(set.alphabet(), std::move(kept));
}

std::vector<Word> all_compositions(int m) {
  if (m < 1) {
    throw InvalidArgument("all_compositions needs m >= 1");
  }
  const auto alphabet = WeightedAlphabet::compositions();
  std::vector<Word> out;
  std::vector<Letter> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(alphabet, parts);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      parts.push_back(Letter{part});
      extend(remaining - part);
      parts.pop_back();
    }
  };
  extend(m);
  return out;
}

}  // namespace wordavoid
