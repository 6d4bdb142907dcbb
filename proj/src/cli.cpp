#include "wordavoid/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wordavoid/correlation.hpp"
#include "wordavoid/errors.hpp"
#include "wordavoid/oracle.hpp"
#include "wordavoid/problem_spec.hpp"
#include "wordavoid/solver.hpp"
#include "wordavoid/walks.hpp"

namespace wordavoid::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  if (!text.empty() && text.back() == sep) {
    out.emplace_back();
  }
  return out;
}

// "--finite ab" gives unit-weight letters a and b; "--finite a:1,b:2" sets
// weights explicitly.
WeightedAlphabet alphabet_from_flags(const std::string& finite,
                                     bool compositions) {
  if (compositions == !finite.empty()) {
    throw InvalidArgument("give exactly one of --finite or --compositions");
  }
  if (compositions) {
    return WeightedAlphabet::compositions();
  }
  if (finite.find(':') == std::string::npos) {
    return WeightedAlphabet::unit(finite);
  }
  std::vector<WeightedAlphabet::Entry> entries;
  for (const auto& item : split(finite, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) {
      throw InvalidArgument("expected symbol:weight, got '" + item + "'");
    }
    const auto weight = parse_rational(item.substr(colon + 1));
    if (weight.get_den() != 1 || !weight.get_num().fits_slong_p()) {
      throw InvalidArgument("weight of '" + item + "' is not an integer");
    }
    entries.push_back({item.substr(0, colon), weight.get_num().get_si()});
  }
  return WeightedAlphabet::finite(std::move(entries));
}

// Comma separated symbols, or one symbol per character for a finite
// alphabet when there is no comma.
Word word_from_arg(const WeightedAlphabet& alphabet, const std::string& text) {
  if (text.empty()) {
    throw InvalidWord("empty word");
  }
  std::vector<std::string> symbols;
  if (text.find(',') != std::string::npos || alphabet.is_compositions()) {
    symbols = split(text, ',');
  } else {
    for (char c : text) {
      symbols.emplace_back(1, c);
    }
  }
  return Word::parse(alphabet, symbols);
}

void print_series(std::ostream& out, const std::vector<BigInt>& counts) {
  for (std::size_t n = 0; n < counts.size(); ++n) {
    out << n << '\t' << counts[n].get_str() << '\n';
  }
}

void print_solution(std::ostream& out, const PatternSet& set,
                    std::optional<std::size_t> series_n, bool auto_reduce) {
  SystemOptions options{auto_reduce};
  const auto gfs = solve(build_system(set.alphabet(), set, options));
  out << "num: " << gfs.f.num().to_string() << '\n';
  out << "den: " << gfs.f.den().to_string() << '\n';
  if (series_n) {
    print_series(out, count_avoiding(set, *series_n, options));
  }
}

struct Options {
  std::string finite;
  bool compositions = false;
  std::string g_word;
  std::string h_word;

  std::string problem_path;
  std::optional<std::size_t> series_n;
  bool auto_reduce = false;
  bool echo = false;
  int m = 0;

  std::size_t max_n = 0;
  unsigned jobs = 1;
  std::uint64_t budget = OracleOptions{}.budget;
  bool by_length = false;
  bool detail = false;
  std::string golden;

  std::string dist;
  std::optional<std::size_t> walk_m;
  bool asymptote = false;
};

int cmd_correlate(const Options& o, std::ostream& out) {
  const auto alphabet = alphabet_from_flags(o.finite, o.compositions);
  const auto bits = correlate(word_from_arg(alphabet, o.g_word),
                              word_from_arg(alphabet, o.h_word));
  out << bits.to_string() << '\n' << correlation_poly(bits).to_string() << '\n';
  return kOk;
}

int cmd_weighted_correlate(const Options& o, std::ostream& out) {
  const auto alphabet = alphabet_from_flags(o.finite, o.compositions);
  const auto wc = weighted_correlate(word_from_arg(alphabet, o.g_word),
                                     word_from_arg(alphabet, o.h_word),
                                     alphabet);
  out << wc.to_string() << '\n'
      << weighted_correlation_poly(wc).to_string() << '\n';
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto problem = load_problem(o.problem_path);
  if (o.echo) {
    out << to_json(problem);
    return kOk;
  }
  print_solution(out, problem.forbidden, o.series_n, o.auto_reduce);
  return kOk;
}

int cmd_compositions(const Options& o, std::ostream& out) {
  if (o.m < 1) {
    throw InvalidArgument("--m must be at least 1");
  }
  const PatternSet set(WeightedAlphabet::compositions(), all_compositions(o.m));
  if (o.echo) {
    out << to_json(ProblemSpec{set});
    return kOk;
  }
  print_solution(out, set, o.series_n, false);
  return kOk;
}

OracleOptions oracle_options(const Options& o) {
  return OracleOptions{o.budget, std::max(1u, o.jobs)};
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto problem = load_problem(o.problem_path);
  if (o.echo) {
    out << to_json(problem);
    return kOk;
  }
  const auto options = oracle_options(o);
  std::vector<OracleCount> rows;
  for (std::size_t n = 0; n <= o.max_n; ++n) {
    rows.push_back(o.by_length
                       ? count_strings_avoiding(problem.forbidden, n, options)
                       : count_weight_avoiding(problem.forbidden,
                                               static_cast<Weight>(n),
                                               options));
  }
  for (const auto& row : rows) {
    out << row.n;
    if (o.detail) {
      out << '\t' << row.total;
    }
    out << '\t' << row.avoiding;
    if (o.detail) {
      for (auto c : row.per_pattern) {
        out << '\t' << c;
      }
    }
    out << '\n';
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto problem = load_problem(o.problem_path);
  const PatternSet set =
      o.auto_reduce ? reduce(problem.forbidden) : problem.forbidden;
  require_reduced(set);
  const auto options = oracle_options(o);

  std::vector<std::uint64_t> oracle;
  for (std::size_t n = 0; n <= o.max_n; ++n) {
    oracle.push_back(
        count_weight_avoiding(set, static_cast<Weight>(n), options).avoiding);
  }
  const auto solver = count_avoiding(set, o.max_n);

  for (std::size_t n = 0; n <= o.max_n; ++n) {
    if (solver[n] != BigInt(std::to_string(oracle[n]))) {
      err << "mismatch at n=" << n << ": solver=" << solver[n].get_str()
          << " oracle=" << oracle[n] << '\n';
      return kMismatch;
    }
  }
  if (!o.golden.empty()) {
    const auto expected = split(o.golden, ',');
    for (std::size_t n = 0; n < expected.size() && n <= o.max_n; ++n) {
      const Rational value = parse_rational(expected[n]);
      if (value != Rational(solver[n])) {
        err << "golden mismatch at n=" << n << ": solver="
            << solver[n].get_str() << " golden=" << to_string(value) << '\n';
        return kMismatch;
      }
    }
  }
  out << "ok: solver matches oracle for n <= " << o.max_n << '\n';
  return kOk;
}

int cmd_walk(const Options& o, std::ostream& out) {
  const auto dist = StepDistribution::parse(o.dist);
  if (o.asymptote == o.walk_m.has_value()) {
    throw InvalidArgument("give exactly one of --m or --asymptote");
  }
  if (o.asymptote) {
    out << to_string(asymptotic_hit(dist)) << '\n';
    return kOk;
  }
  const Rational p = p_hit(dist, *o.walk_m);
  out << to_string(p) << '\n' << to_decimal(p, 12) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Count weighted strings that avoid forbidden substrings",
               "wordavoid"};
  app.require_subcommand(1);
  Options o;

  auto add_alphabet = [&o](CLI::App* cmd) {
    // --h names a word here, so help is --help only.
    cmd->set_help_flag("--help", "Print this help message and exit");
    auto* finite = cmd->add_option(
        "--finite", o.finite,
        "finite alphabet: letters (\"ab\") or symbol:weight list");
    auto* comps = cmd->add_flag("--compositions", o.compositions,
                                "composition alphabet {1,2,3,...}");
    finite->excludes(comps);
  };

  auto* correlate_cmd = app.add_subcommand("correlate", "correlation bits of G and H");
  add_alphabet(correlate_cmd);
  correlate_cmd->add_option("--g", o.g_word, "word G")->required();
  correlate_cmd->add_option("--h", o.h_word, "word H")->required();

  auto* weighted_cmd =
      app.add_subcommand("weighted-correlate", "weighted correlation of G and H");
  add_alphabet(weighted_cmd);
  weighted_cmd->add_option("--g", o.g_word, "word G")->required();
  weighted_cmd->add_option("--h", o.h_word, "word H")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem file for F(z)");
  solve_cmd->add_option("problem", o.problem_path, "problem JSON")->required();
  solve_cmd->add_option("--series", o.series_n, "print f(0..N)");
  solve_cmd->add_flag("--auto-reduce", o.auto_reduce,
                      "drop words containing other words first");
  solve_cmd->add_flag("--echo", o.echo, "print the parsed problem and exit");

  auto* comp_cmd = app.add_subcommand(
      "compositions", "compositions avoiding every composition of m");
  comp_cmd->add_option("--m", o.m, "forbidden weight")->required();
  comp_cmd->add_option("--series", o.series_n, "print f(0..N)");
  comp_cmd->add_flag("--echo", o.echo, "print the problem and exit");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counts");
  oracle_cmd->add_option("problem", o.problem_path, "problem JSON")->required();
  oracle_cmd->add_option("--max-n", o.max_n, "largest weight")->required();
  oracle_cmd->add_option("--jobs", o.jobs, "enumeration threads");
  oracle_cmd->add_option("--budget", o.budget, "enumeration budget");
  oracle_cmd->add_flag("--by-length", o.by_length,
                       "count by length instead of weight");
  oracle_cmd->add_flag("--detail", o.detail,
                       "also print totals and per-word counts");
  oracle_cmd->add_flag("--echo", o.echo, "print the parsed problem and exit");

  auto* check_cmd =
      app.add_subcommand("check", "compare solver series with brute force");
  check_cmd->add_option("problem", o.problem_path, "problem JSON")->required();
  check_cmd->add_option("--max-n", o.max_n, "largest weight")->required();
  check_cmd->add_option("--jobs", o.jobs, "enumeration threads");
  check_cmd->add_option("--budget", o.budget, "enumeration budget");
  check_cmd->add_option("--golden", o.golden,
                        "comma separated expected f(0), f(1), ...");
  check_cmd->add_flag("--auto-reduce", o.auto_reduce,
                      "drop words containing other words first");

  auto* walk_cmd = app.add_subcommand("walk", "one-sided random walk hit probability");
  walk_cmd->add_option("--dist", o.dist, "die1, dice2 or i:p/q,...")->required();
  auto* m_opt = walk_cmd->add_option("--m", o.walk_m, "target square");
  auto* asym = walk_cmd->add_flag("--asymptote", o.asymptote,
                                  "print lim P(m) = 1/mean");
  m_opt->excludes(asym);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (correlate_cmd->parsed()) return cmd_correlate(o, out);
    if (weighted_cmd->parsed()) return cmd_weighted_correlate(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (comp_cmd->parsed()) return cmd_compositions(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out, err);
    if (walk_cmd->parsed()) return cmd_walk(o, out);
  } catch (const NotReducedError& e) {
    err << "error: " << e.what() << '\n';
    return kNotReduced;
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidWord& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kParseError;
}

}  // namespace wordavoid::cli
