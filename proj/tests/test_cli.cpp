#include <sstream>

#include "doctest.h"
#include "wordavoid/cli.hpp"
#include "wordavoid/problem_spec.hpp"

using namespace wordavoid;

namespace {

const std::string kData = WORDAVOID_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* const kThreeSeries =
    "0\t1\n1\t1\n2\t2\n3\t0\n4\t2\n5\t3\n6\t9\n7\t12\n8\t20\n";

}  // namespace

TEST_CASE("correlate commands") {
  auto r = run({"correlate", "--finite", "ab", "--g", "ababba", "--h", "abbab"});
  CHECK(r.code == 0);
  CHECK(r.out == "001001\n[1, 0, 0, 1]\n");

  r = run({"weighted-correlate", "--compositions", "--g", "1,1,1", "--h", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{1,2,3}\n[0, 1, 1, 1]\n");

  r = run({"correlate", "--finite", "abcd", "--g", "abab", "--h", "cd"});
  CHECK(r.out == "0000\n[]\n");

  r = run({"weighted-correlate", "--finite", "a:1,b:2", "--g", "ab", "--h", "b"});
  CHECK(r.out == "{2}\n[0, 0, 1]\n");

  CHECK(run({"correlate", "--finite", "ab", "--g", "abx", "--h", "a"}).code == 2);
  CHECK(run({"correlate", "--g", "ab", "--h", "a"}).code == 2);
  CHECK(run({"correlate", "--finite", "ab", "--compositions", "--g", "a", "--h", "a"}).code == 2);
}

TEST_CASE("solve command") {
  auto r = run({"solve", kData + "/compositions_m3.json", "--series", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == std::string("num: [0, 0, 0, 1, 0, -2, 0, 0, 1]\n"
                             "den: [1, 1, -1, -1, -1, 1, -1, -1, 1]\n") +
                     kThreeSeries);

  auto comps = run({"compositions", "--m", "3", "--series", "8"});
  CHECK(comps.code == 0);
  CHECK(comps.out == r.out);

  r = run({"solve", kData + "/compositions_empty.json", "--series", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "num: [-1, 1]\nden: [-2, 1]\n0\t1\n1\t1\n2\t2\n3\t4\n4\t8\n5\t16\n");

  r = run({"solve", kData + "/not_reduced.json"});
  CHECK(r.code == 3);
  CHECK(r.err.find("2+1") != std::string::npos);
  CHECK(r.err.find("1+2+1") != std::string::npos);

  r = run({"solve", kData + "/not_reduced.json", "--auto-reduce", "--series", "3"});
  CHECK(r.code == 0);

  CHECK(run({"solve", kData + "/missing.json"}).code == 2);
  CHECK(run({"solve"}).code == 2);
}

TEST_CASE("check command") {
  CHECK(run({"check", kData + "/compositions_m3.json", "--max-n", "14"}).code == 0);
  CHECK(run({"check", kData + "/weighted_abc.json", "--max-n", "12", "--jobs", "2"}).code == 0);

  auto r = run({"check", kData + "/compositions_m3.json", "--max-n", "8", "--golden",
                "1,1,2,0,2,3,9,12,21"});
  CHECK(r.code == 1);
  CHECK(r.err.find("n=8") != std::string::npos);

  r = run({"check", kData + "/compositions_m3.json", "--max-n", "8", "--golden",
           "1,1,2,0,2,3,9,12,20"});
  CHECK(r.code == 0);

  CHECK(run({"check", kData + "/compositions_m3.json", "--max-n", "30"}).code == 5);
  CHECK(run({"check", kData + "/compositions_m3.json", "--max-n", "10", "--budget", "100"})
            .code == 5);
  CHECK(run({"check", kData + "/not_reduced.json", "--max-n", "5"}).code == 3);
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", kData + "/compositions_m3.json", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == kThreeSeries);

  r = run({"oracle", kData + "/binary_aa.json", "--max-n", "3", "--by-length", "--detail"});
  CHECK(r.out == "0\t1\t1\t0\n1\t2\t2\t0\n2\t4\t3\t1\n3\t8\t5\t1\n");
}

TEST_CASE("walk command") {
  CHECK(run({"walk", "--dist", "die1", "--asymptote"}).out == "2/7\n");
  CHECK(run({"walk", "--dist", "dice2", "--asymptote"}).out == "1/7\n");
  CHECK(run({"walk", "--dist", "die1", "--m", "0"}).out == "1\n1.00000000000\n");
  CHECK(run({"walk", "--dist", "die1", "--m", "2"}).out == "7/36\n0.194444444444\n");
  CHECK(run({"walk", "--dist", "1:1/2,2:1/3", "--m", "2"}).code == 2);
  CHECK(run({"walk", "--dist", "die1"}).code == 2);
}

TEST_CASE("echo round trip") {
  for (const char* file : {"compositions_m3.json", "binary_aa.json", "weighted_abc.json",
                           "compositions_empty.json"}) {
    const auto original = load_problem(kData + "/" + file);
    auto r = run({"solve", kData + "/" + file, "--echo"});
    CHECK(r.code == 0);
    CHECK(parse_problem(r.out) == original);
    CHECK(to_json(parse_problem(r.out)) == r.out);
  }
  auto r = run({"compositions", "--m", "3", "--echo"});
  CHECK(parse_problem(r.out).forbidden.size() == 4);
}

TEST_CASE("problem parse errors name the field") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_problem(text);
      FAIL("expected ParseError for " << text);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  expect_error("{", "line 1");
  expect_error(R"({"forbidden": []})", "alphabet");
  expect_error(R"({"alphabet": {"kind": "other"}, "forbidden": []})", "alphabet.kind");
  expect_error(R"({"alphabet": {"kind": "compositions"}, "forbidden": [["1", "x"]]})",
               "forbidden[0][1]");
  expect_error(R"({"alphabet": {"kind": "compositions"}, "forbidden": [[3]]})",
               "forbidden[0][0]");
  expect_error(R"({"alphabet": {"kind": "compositions"}, "forbidden": [[]]})", "forbidden[0]");
  expect_error(
      R"({"alphabet": {"kind": "finite", "letters": [{"symbol": "a", "weight": 0}]},
          "forbidden": []})",
      "alphabet.letters[0].weight");
  expect_error(R"({"alphabet": {"kind": "compositions"}, "forbidden": [], "x": 1})", "\"x\"");
}
