#include "doctest.h"
#include "qlab/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = qlab::run_subcommand(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  CliResult r = run(args);
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("gen lists members and echoes the canonical spec") {
  json j = run_json({"gen", "--set", "interval-union(a=2, b=5)", "--upto", "30"});
  CHECK(j["spec"] == "interval-union(a=2, b=5)");
  CHECK(j["upto"] == 30);
  CHECK(j["count"] == 12);
  CHECK(j["elements"] ==
        json::array({1, 5, 6, 7, 8, 9, 25, 26, 27, 28, 29, 30}));
}

TEST_CASE("gen normalizes sugar to the underlying family") {
  json j = run_json({"gen", "--set", "delta-family(0.4)", "--upto", "10"});
  CHECK(j["spec"] == "interval-union(a=5/4, b=13/8)");
  CHECK(j["elements"] == json::array({1, 2, 3, 5, 7, 8}));
}

TEST_CASE("density reports exact bounds with decimal companions") {
  json j = run_json({"density", "--set", "interval-union(a=2, b=10)",
                     "--upto", "20000"});
  CHECK(j["depth"] == 4);
  CHECK(j["liminf_bound"] == "1/9");
  CHECK(j["liminf_bound_decimal"] == "0.111111111111111");
  CHECK(j["limsup_bound"] == "11/19");
  REQUIRE(j["liminf_points"].is_array());
  REQUIRE(j["liminf_points"].size() == 4);
  CHECK(j["liminf_points"][0]["x"] == 9);
  CHECK(j["liminf_points"][0]["count"] == 1);
  CHECK(j["liminf_points"][0]["ratio"] == "1/9");
  CHECK(j["limsup_points"][3]["x"] == 19999);
}

TEST_CASE("density writes the profile as CSV") {
  CliResult r = run({"density", "--set", "interval-union(a=2, b=10)",
                     "--upto", "20000", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "x,count,ratio_numerator,ratio_denominator,ratio_decimal");
  CHECK(lines[1] == "9,1,1,9,0.111111111111111");
  CHECK(lines[2] == "19,11,11,19,0.578947368421053");
  CHECK(lines[3].substr(0, 8) == "99,11,1,");
  CHECK(lines[8].substr(0, 17) == "19999,11111,11111");
}

TEST_CASE("density rejects a bound below the first two sample scales") {
  CliResult r = run({"density", "--set", "interval-union(a=2, b=10)",
                     "--upto", "19"});
  CHECK(r.code == 2);
}

TEST_CASE("gaps emits empirical certificates") {
  json j = run_json({"gaps", "--set", "interval-union(a=2, b=5)", "--cutoff",
                     "10000", "--window", "1,5"});
  CHECK(j["spec"] == "interval-union(a=2, b=5)");
  CHECK(j["cutoff"] == 10000);
  CHECK(j["window"] == json::array({"1", "5"}));
  CHECK(j["min_width"] == "1/100");
  REQUIRE(j["gaps"].size() == 1);
  CHECK(j["gaps"][0]["lo"] == "6249/3125");
  CHECK(j["gaps"][0]["hi"] == "3125/1249");
  CHECK(j["gaps"][0]["kind"] == "empirical");
  CHECK(j["gaps"][0].contains("lo_decimal"));
}

TEST_CASE("classify gives verdicts with certificates where they exist") {
  json dense = run_json({"classify", "--set", "interval-union(a=2, b=4)"});
  CHECK(dense["verdict"] == "dense");
  CHECK(dense["certificate"].is_null());

  json nd = run_json({"classify", "--set", "leading-digit(base=10, digits={1})"});
  CHECK(nd["verdict"] == "not-dense");
  REQUIRE(nd["certificate"].is_object());
  CHECK(nd["certificate"]["lo"] == "20");
  CHECK(nd["certificate"]["hi"] == "50");
  CHECK(nd["certificate"]["kind"] == "analytic");
  CHECK(nd["certificate"]["ell"] == 1);

  json unk = run_json({"classify", "--set", "factorial(A)"});
  CHECK(unk["verdict"] == "unknown");
  CHECK(unk["certificate"].is_null());
}

TEST_CASE("approx dispatches on the spec shape") {
  json iu = run_json({"approx", "--set", "interval-union(a=2, b=3)",
                      "--target", "21/2", "--eps", "1/100"});
  CHECK(iu["method"] == "interval-union-constructive");
  CHECK(iu["witness"]["num"] == "2551");
  CHECK(iu["witness"]["den"] == "243");
  CHECK(iu["error"] == "1/486");
  CHECK(iu["error_decimal"] == "0.00205761316872428");

  json pp = run_json({"approx", "--set",
                      "union(powers(base=2, min-exp=2); powers(base=3, min-exp=2))",
                      "--target", "1", "--eps", "1/5"});
  CHECK(pp["method"] == "bounded-exponent-search");
  CHECK(pp["witness"]["num"] == "9");
  CHECK(pp["witness"]["den"] == "8");

  CliResult bad = run({"approx", "--set", "factorial(A)", "--target", "2",
                       "--eps", "1/10"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("approx supports interval-union sets") != std::string::npos);
}

TEST_CASE("ap reports the first progression or null") {
  json hit = run_json({"ap", "--set", "interval-union(a=2, b=10)", "--upto",
                       "10000", "--length", "50"});
  CHECK(hit["found"]["first"] == 100);
  CHECK(hit["found"]["diff"] == 1);
  CHECK(hit["found"]["len"] == 50);

  json miss = run_json({"ap", "--set",
                        "union(powers(base=2, min-exp=2); powers(base=3, min-exp=2))",
                        "--upto", "100000"});
  CHECK(miss["found"].is_null());
  CHECK(miss["ap_length_requested"] == 3);
}

TEST_CASE("partition verifies the stock tilings") {
  json three = run_json({"partition", "three-way", "--upto", "2000"});
  CHECK(three["valid"] == true);
  REQUIRE(three["parts"].size() == 3);
  CHECK(three["parts"][0] == "leading-digit(base=5, digits={1})");

  json fact = run_json({"partition", "factorial", "--upto", "2000"});
  CHECK(fact["valid"] == true);
  REQUIRE(fact["parts"].size() == 2);
}

TEST_CASE("refute produces a checked witness with its search trace") {
  json j = run_json({"refute", "three-way-ab", "--eps", "1/10", "--upto",
                     "1000000"});
  CHECK(j["alpha"] == "2");
  CHECK(j["beta"] == "2");
  CHECK(j["witness"]["part_index"] == 1);
  CHECK(j["witness"]["num"] == "624");
  CHECK(j["witness"]["den"] == "310");
  CHECK(j["witness"]["quotient"] == "312/155");
  CHECK(j["witness"]["center"] == "2");
  REQUIRE(j["trace"].size() == 6);
  CHECK(j["trace"][0]["step"] == "n0");
  CHECK(j["trace"][0]["value"] == "131");
  CHECK(j["trace"][5]["step"] == "branch");
  CHECK(j["trace"][5]["value"] == "4");

  json f = run_json({"refute", "factorial", "--beta", "3/2", "--eps", "1/20",
                     "--upto", "1000000"});
  CHECK(f["witness"]["num"] == "435");
  CHECK(f["witness"]["den"] == "290");
  CHECK(f["witness"]["quotient"] == "3/2");
}

TEST_CASE("gem reports run clean") {
  for (int which = 1; which <= 4; ++which) {
    CliResult r = run({"gem", std::to_string(which)});
    CHECK(r.code == 0);
    CHECK(r.out.find("checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CliResult two = run({"gem", "2"});
  CHECK(two.out.find("proven theorem, not a computation") != std::string::npos);
  CliResult five = run({"gem", "5"});
  CHECK(five.code == 2);
}

TEST_CASE("help exits zero; usage errors exit two; domain errors exit one") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"gen", "--help"}).code == 0);

  CHECK(run({}).code == 2);                 // no subcommand
  CHECK(run({"bogus"}).code == 2);          // unknown subcommand
  CHECK(run({"gen", "--upto", "5"}).code == 2);  // --set missing
  CHECK(run({"gen", "--set", "interval-union(a=2, b=5)", "--upto", "30",
             "--format", "csv"}).code == 2);     // csv not offered here
  CHECK(run({"gaps", "--set", "interval-union(a=2, b=5)", "--cutoff", "10",
             "--window", "nonsense"}).code == 2);

  CliResult parse = run({"gen", "--set", "interval-union(a=1, b=5)",
                         "--upto", "5"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("parse error:") == 0);
  CHECK(parse.err.find("(at position 14)") != std::string::npos);

  // well-formed request, impossible mathematics: a domain error
  CliResult dom = run({"gaps", "--set", "interval-union(a=2, b=5)", "--cutoff",
                       "10", "--window", "5,1"});
  CHECK(dom.code == 1);
  CHECK(dom.err.find("error:") == 0);
}

TEST_CASE("--out writes the same bytes the terminal would get") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "qlab_cli_out_test.json";
  std::vector<std::string> base = {"gen", "--set", "powers(base=2, min-exp=2)",
                                   "--upto", "100"};
  CliResult direct = run(base);
  REQUIRE(direct.code == 0);

  std::vector<std::string> filed = base;
  filed.push_back("--out");
  filed.push_back(path.string());
  CliResult via_file = run(filed);
  REQUIRE(via_file.code == 0);
  CHECK(via_file.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path.string().c_str());

  std::vector<std::string> bad = base;
  bad.push_back("--out");
  bad.push_back("/nonexistent-dir/qlab.json");
  CliResult fail = run(bad);
  CHECK(fail.code == 1);
  CHECK(fail.err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("repeated invocations emit identical bytes") {
  std::vector<std::string> args = {"classify", "--set",
                                   "leading-digit(base=5, digits={3,4})"};
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("random argument vectors never escape the exit-code contract") {
  const std::vector<std::string> pool = {
      "gen", "gaps", "density", "classify", "approx", "ap", "partition",
      "refute", "gem", "--set", "--upto", "--cutoff", "--window", "--eps",
      "--target", "--min-width", "--format", "--length", "--alpha", "--beta",
      "interval-union(a=2, b=5)", "factorial(A)", "powers(base=2, min-exp=1)",
      "nonsense(", "three-way", "factorial", "1,5", "5,1", "csv", "json",
      "10", "100", "0", "-3", "1/10", "2/0", "x", "--help"};
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> args;
    std::size_t len = rng() % 7;
    for (std::size_t i = 0; i < len; ++i) args.push_back(pool[rng() % pool.size()]);
    CliResult r = run(args);
    CHECK(r.code >= 0);
    CHECK(r.code <= 2);
  }
}
