#include "wordavoid/oracle.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <string>

#include "wordavoid/errors.hpp"
#include "wordavoid/rational.hpp"

namespace wordavoid {

namespace {

void check_budget(const BigInt& total, const OracleOptions& options,
                  const std::string& what) {
  if (total > BigInt(std::to_string(options.budget))) {
    throw BudgetExceeded(what + " needs " + total.get_str() +
                         " strings, enumeration budget is " +
                         std::to_string(options.budget));
  }
}

BigInt count_all_by_weight(const WeightedAlphabet& alphabet, Weight n) {
  if (n < 0) {
    return 0;
  }
  if (alphabet.is_compositions()) {
    if (n == 0) {
      return 1;
    }
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    return out;
  }
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (Weight w = 1; w <= n; ++w) {
    for (const auto& entry : alphabet.letters()) {
      if (entry.weight <= w) {
        ways[static_cast<std::size_t>(w)] +=
            ways[static_cast<std::size_t>(w - entry.weight)];
      }
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

// Depth-first enumeration of strings, abandoning a prefix as soon as it
// contains a forbidden word. A string is complete when `size` reaches
// `target`, where size is the length or the weight.
class Enumerator {
 public:
  Enumerator(const PatternSet& set, bool by_weight, Weight target)
      : set_(set), by_weight_(by_weight), target_(target) {}

  OracleCount run(const std::vector<Letter>& first_letters) {
    OracleCount out;
    out.per_pattern.assign(set_.size(), 0);
    current_.clear();
    if (target_ == 0) {
      out.avoiding = 1;
      return out;
    }
    for (Letter l : first_letters) {
      visit(l, 0, out);
    }
    return out;
  }

  std::vector<Letter> candidates(Weight size) const {
    const Weight remaining = target_ - size;
    if (by_weight_) {
      return set_.alphabet().letters_up_to(remaining);
    }
    if (remaining <= 0) {
      return {};
    }
    return set_.alphabet().letters_up_to(
        std::numeric_limits<Weight>::max());
  }

 private:
  void visit(Letter letter, Weight size, OracleCount& out) {
    current_.push_back(letter);
    size += by_weight_ ? set_.alphabet().weight(letter) : 1;

    std::size_t matches = 0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (ends_with(set_[i])) {
        ++matches;
        matched = i;
      }
    }

    const bool complete = size == target_;
    if (matches == 0) {
      if (complete) {
        ++out.avoiding;
      } else {
        for (Letter next : candidates(size)) {
          visit(next, size, out);
        }
      }
    } else if (matches == 1 && complete) {
      ++out.per_pattern[matched];
    }
    current_.pop_back();
  }

  bool ends_with(const Word& word) const {
    if (word.size() > current_.size()) {
      return false;
    }
    auto letters = word.letters();
    return std::equal(letters.begin(), letters.end(),
                      current_.end() - static_cast<std::ptrdiff_t>(word.size()));
  }

  const PatternSet& set_;
  bool by_weight_;
  Weight target_;
  std::vector<Letter> current_;
};

OracleCount enumerate(const PatternSet& set, bool by_weight, Weight target,
                      const OracleOptions& options) {
  Enumerator root(set, by_weight, target);
  const auto first = target == 0 ? std::vector<Letter>{} : root.candidates(0);
  if (options.jobs <= 1 || first.size() <= 1) {
    return root.run(first);
  }

  // One task per block of first letters; summed in letter order.
  const std::size_t jobs = std::min<std::size_t>(options.jobs, first.size());
  std::vector<std::future<OracleCount>> tasks;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::vector<Letter> block;
    for (std::size_t i = j; i < first.size(); i += jobs) {
      block.push_back(first[i]);
    }
    tasks.push_back(std::async(std::launch::async, [&set, by_weight, target,
                                                    block = std::move(block)] {
      Enumerator e(set, by_weight, target);
      return e.run(block);
    }));
  }
  OracleCount out;
  out.per_pattern.assign(set.size(), 0);
  for (auto& task : tasks) {
    OracleCount part = task.get();
    out.avoiding += part.avoiding;
    for (std::size_t i = 0; i < set.size(); ++i) {
      out.per_pattern[i] += part.per_pattern[i];
    }
  }
  return out;
}

}  // namespace

OracleCount count_strings_avoiding(const PatternSet& set, std::size_t length,
                                   const OracleOptions& options) {
  if (set.alphabet().is_compositions()) {
    throw InvalidArgument(
        "length enumeration needs a finite alphabet; use weight enumeration");
  }
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), set.alphabet().size(), length);
  check_budget(total, options, "length " + std::to_string(length));
  OracleCount out =
      enumerate(set, false, static_cast<Weight>(length), options);
  out.n = static_cast<std::int64_t>(length);
  out.total = total.get_ui();
  return out;
}

OracleCount count_weight_avoiding(const PatternSet& set, Weight n,
                                  const OracleOptions& options) {
  if (n < 0) {
    throw InvalidArgument("weight must be nonnegative");
  }
  const BigInt total = count_all_by_weight(set.alphabet(), n);
  check_budget(total, options, "weight " + std::to_string(n));
  OracleCount out = enumerate(set, true, n, options);
  out.n = n;
  out.total = total.get_ui();
  return out;
}

OracleCount count_compositions_avoiding(const PatternSet& set, Weight n,
                                        const OracleOptions& options) {
  if (!set.alphabet().is_compositions()) {
    throw InvalidArgument("pattern set is not over the composition alphabet");
  }
  return count_weight_avoiding(set, n, options);
}

namespace {

// Parts appended one at a time; sums[s] marks the prefix sums seen so far.
// A new prefix sum s closes a window of weight m iff s - m was a prefix sum.
std::uint64_t windows_avoiding(Weight m, Weight n, Weight sum,
                               std::vector<bool>& sums) {
  if (sum == n) {
    return 1;
  }
  std::uint64_t count = 0;
  for (Weight part = 1; sum + part <= n; ++part) {
    const Weight next = sum + part;
    if (next - m >= 0 && sums[static_cast<std::size_t>(next - m)]) {
      continue;
    }
    sums[static_cast<std::size_t>(next)] = true;
    count += windows_avoiding(m, n, next, sums);
    sums[static_cast<std::size_t>(next)] = false;
  }
  return count;
}

std::uint64_t prefixes_avoiding(Weight m, Weight n, Weight sum) {
  if (sum == n) {
    return 1;
  }
  std::uint64_t count = 0;
  for (Weight part = 1; sum + part <= n; ++part) {
    if (sum + part != m) {
      count += prefixes_avoiding(m, n, sum + part);
    }
  }
  return count;
}

}  // namespace

std::uint64_t count_avoiding_all_of_weight(Weight m, Weight n,
                                           const OracleOptions& options) {
  if (m < 1 || n < 0) {
    throw InvalidArgument("need m >= 1 and n >= 0");
  }
  check_budget(count_all_by_weight(WeightedAlphabet::compositions(), n),
               options, "weight " + std::to_string(n));
  std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
  sums[0] = true;
  return windows_avoiding(m, n, 0, sums);
}

std::uint64_t count_avoiding_initial(Weight m, Weight n,
                                     const OracleOptions& options) {
  if (m < 1 || m >= n) {
    throw InvalidArgument("need 1 <= m < n");
  }
  check_budget(count_all_by_weight(WeightedAlphabet::compositions(), n),
               options, "weight " + std::to_string(n));
  return prefixes_avoiding(m, n, 0);
}

}  // namespace wordavoid
