#ifndef WORDAVOID_CORE_TYPES_HPP
#define WORDAVOID_CORE_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordavoid {

using Weight = std::int64_t;

/// A letter code. For the composition alphabet the code is the part itself;
/// for a finite alphabet it is the index of the letter in the alphabet.
struct Letter {
  std::int64_t code = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A set of letters with positive integer weights. Either an explicit finite
/// list, or the composition alphabet {1, 2, 3, ...} where letter i weighs i.
class WeightedAlphabet {
 public:
  enum class Kind { Finite, Compositions };

  struct Entry {
    std::string symbol;
    Weight weight = 1;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static WeightedAlphabet compositions();
  /// Throws InvalidArgument on an empty list, duplicate symbols or a weight < 1.
  static WeightedAlphabet finite(std::vector<Entry> letters);
  /// Every character of `symbols` becomes a letter of weight 1.
  static WeightedAlphabet unit(std::string_view symbols);

  Kind kind() const { return kind_; }
  bool is_compositions() const { return kind_ == Kind::Compositions; }
  /// Letter count q; zero for the (infinite) composition alphabet.
  std::size_t size() const { return letters_.size(); }
  const std::vector<Entry>& letters() const { return letters_; }

  bool contains(Letter letter) const;
  /// Throws InvalidWord for letters outside the alphabet.
  Weight weight(Letter letter) const;
  Letter letter(std::string_view symbol) const;
  std::string symbol(Letter letter) const;

  /// Letters of weight at most `max_weight`, in code order.
  std::vector<Letter> letters_up_to(Weight max_weight) const;

  friend bool operator==(const WeightedAlphabet&,
                         const WeightedAlphabet&) = default;

 private:
  WeightedAlphabet(Kind kind, std::vector<Entry> letters)
      : kind_(kind), letters_(std::move(letters)) {}

  Kind kind_;
  std::vector<Entry> letters_;
};

class Word {
 public:
  Word() = default;
  /// Validates every letter against `alphabet` and caches the weight.
  Word(const WeightedAlphabet& alphabet, std::vector<Letter> letters);

  static Word parse(const WeightedAlphabet& alphabet,
                    const std::vector<std::string>& symbols);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Weight weight() const { return weight_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// True when `other` occurs in this word as a contiguous block.
  bool contains(const Word& other) const;

  std::vector<std::string> symbols(const WeightedAlphabet& alphabet) const;
  /// Parts joined by '+' for compositions ("2+1"); for finite alphabets the
  /// symbols are concatenated when all are one character, else comma separated.
  std::string to_string(const WeightedAlphabet& alphabet) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Weight weight_ = 0;
};

Weight word_weight(const Word& word, const WeightedAlphabet& alphabet);

/// Forbidden words over one alphabet. An empty word is an InvalidArgument;
/// a repeated word is a NotReducedError (equal words contain each other).
class PatternSet {
 public:
  PatternSet(WeightedAlphabet alphabet, std::vector<Word> words);

  const WeightedAlphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  WeightedAlphabet alphabet_;
  std::vector<Word> words_;
};

bool is_reduced(const PatternSet& set);

/// Throws NotReducedError naming the first offending (inner, outer) pair.
void require_reduced(const PatternSet& set);

/// Drops every word that contains another member.
PatternSet reduce(const PatternSet& set);

/// All 2^(m-1) compositions of m in lexicographic order of parts.
std::vector<Word> all_compositions(int m);

}  // namespace wordavoid

#endif  // WORDAVOID_CORE_TYPES_HPP
