// tests/test_cli.cpp
#include <doctest.h>

#include "recip/cli.hpp"
#include "recip/numeric.hpp"
#include "../src/cli/commands.hpp"

#include <json.hpp>

#include <sstream>

using namespace recip;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute emits the worked example as JSON strings") {
  auto r = run({"compute", "--a", "8411", "--b", "2732", "--h", "1221"});
  REQUIRE(r.code == 0);
  auto doc = ordered_json::parse(r.out);
  CHECK(doc["a"] == "8411");
  CHECK(doc["normalized"] == false);
  auto& sums = doc["sums"];
  CHECK(sums["q"] == "241709");
  CHECK(sums["r"] == "5142293");
  CHECK(sums["r2"] == "28850219593");
  CHECK(sums["t1"] == "2219247661/5441917");
  CHECK(sums["t2"] == "196956430");
  CHECK(sums["t3"] == "63853169");
  CHECK(sums["ir"] == "3138400122");
  CHECK(sums["qr"] == "1015962301");
  CHECK(sums["s"] == "658946167630/647");
  CHECK(!doc.contains("trace"));
  // re-emitting the parsed document reproduces the output
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("compute field set follows --targets") {
  auto r = run({"compute", "--a", "5", "--b", "3", "--h", "4", "--targets", "t1"});
  REQUIRE(r.code == 0);
  auto doc = ordered_json::parse(r.out);
  CHECK(doc["sums"].size() == 1);
  CHECK(doc["sums"]["t1"] == "6/5");

  auto both = ordered_json::parse(
      run({"compute", "--a", "5", "--b", "3", "--h", "4", "--targets", "qr,q"}).out);
  std::vector<std::string> keys;
  for (auto& [k, v] : both["sums"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"q", "qr"});
  CHECK(both["sums"]["qr"] == "9");

  auto zero = ordered_json::parse(run({"compute", "--a", "7", "--b", "3", "--h", "0"}).out);
  for (auto& [k, v] : zero["sums"].items()) CHECK(v == "0");
}

TEST_CASE("compute normalizes non-coprime inputs") {
  auto r = run({"compute", "--a", "4", "--b", "6", "--h", "3"});
  REQUIRE(r.code == 0);
  auto doc = ordered_json::parse(r.out);
  CHECK(doc["normalized"] == true);
  CHECK(doc["a"] == "2");
  CHECK(doc["b"] == "3");
  CHECK(doc["sums"]["q"] == "8");  // 1 + 3 + 4
}

TEST_CASE("compute traces fold to the reported values") {
  auto r = run({"compute", "--a", "8411", "--b", "2732", "--h", "1221", "--trace"});
  REQUIRE(r.code == 0);
  auto doc = ordered_json::parse(r.out);
  REQUIRE(doc["trace"].is_array());
  std::size_t seen = 0;
  for (auto& entry : doc["trace"]) {
    Rational total;
    for (auto& step : entry["steps"]) total += Rational::parse(step["contribution"].get<std::string>());
    std::string target = entry["target"];
    CHECK(total.str() == entry["value"].get<std::string>());
    CHECK(entry["value"] == doc["sums"][target]);
    ++seen;
  }
  CHECK(seen == 3);
  auto first = doc["trace"][1]["steps"][0];
  CHECK(first["rule"] == "reciprocity");
  CHECK(first["derived"]["H"] == "2335");
  CHECK(first["derived"]["n1"] == "2336");
}

TEST_CASE("compute text format") {
  auto r = run({"compute", "--a", "5", "--b", "3", "--h", "4", "--format", "text", "--targets",
                "t2,s", "--trace"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("t2 = 13") != std::string::npos);
  CHECK(r.out.find("s = 17") != std::string::npos);
  CHECK(r.out.find("reciprocity a=5 b=3 h=4") != std::string::npos);
}

TEST_CASE("compute rejects invalid input with exit code 2") {
  CHECK(run({"compute", "--a", "0", "--b", "3", "--h", "4"}).code == 2);
  CHECK(run({"compute", "--a", "5", "--b", "3", "--h", "-1"}).code == 2);
  CHECK(run({"compute", "--a", "5x", "--b", "3", "--h", "1"}).code == 2);
  CHECK(run({"compute", "--a", "5", "--b", "3"}).code == 2);
  CHECK(run({"compute", "--a", "5", "--b", "3", "--h", "1", "--targets", "t9"}).code == 2);
  CHECK(run({"compute", "--a", "5", "--b", "3", "--h", "1", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify single instances and sweeps") {
  auto r = run({"verify", "--a", "7", "--b", "3", "--h", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 mismatch") != std::string::npos);
  CHECK(run({"verify", "--a", "4", "--b", "6", "--h", "3"}).code == 0);
  CHECK(run({"verify", "--a", "8411", "--b", "2732", "--h", "1221"}).code == 0);
  auto sweep = run({"verify", "--max", "25"});
  CHECK(sweep.code == 0);
  CHECK(run({"verify", "--max", "12", "--h-grid", "0,3,a+1,3a/2-1"}).code == 0);
  CHECK(run({"verify", "--a", "7"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--max", "9", "--h-grid", "b+1"}).code == 2);
  CHECK(run({"verify", "--a", "7", "--b", "3", "--h", "100", "--oracle-limit", "10"}).code == 2);
}

TEST_CASE("h-grid tokens") {
  Integer v;
  CHECK(cli::eval_grid_token("2a+3", 10, v));
  CHECK(v == 23);
  CHECK(cli::eval_grid_token("a/2", 7, v));
  CHECK(v == 3);
  CHECK(cli::eval_grid_token("a-1", 7, v));
  CHECK(v == 6);
  CHECK(cli::eval_grid_token("12", 7, v));
  CHECK(v == 12);
  CHECK_FALSE(cli::eval_grid_token("", 7, v));
  CHECK_FALSE(cli::eval_grid_token("a/0", 7, v));
  CHECK_FALSE(cli::eval_grid_token("a*2", 7, v));
  auto grid = cli::eval_grid("0,1,a/2,a-1,a,2a+3", 2);
  CHECK(grid == std::vector<Integer>{0, 1, 2, 7});
}

TEST_CASE("frobenius command") {
  auto doc = ordered_json::parse(run({"frobenius", "--a", "3", "--b", "5"}).out);
  CHECK(doc["nonrep_count"] == "4");
  CHECK(doc["nonrep_sum"] == "14");
  doc = ordered_json::parse(run({"frobenius", "--a", "2", "--b", "3", "--n", "5"}).out);
  CHECK(doc["four_var_count"] == "16");
  doc = ordered_json::parse(run({"frobenius", "--a", "1", "--b", "9"}).out);
  CHECK(doc["nonrep_count"] == "0");
  CHECK(run({"frobenius", "--a", "4", "--b", "6"}).code == 2);
  CHECK(run({"frobenius", "--a", "2", "--b", "3", "--n", "6"}).code == 2);
  auto text = run({"frobenius", "--a", "3", "--b", "5", "--format", "text"});
  CHECK(text.out.find("nonrep_sum = 14") != std::string::npos);
}

TEST_CASE("bench output is deterministic apart from timings") {
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, kept;
    while (std::getline(in, line)) kept += line.substr(0, line.rfind(',')) + "\n";
    return kept;
  };
  auto first = run({"bench", "--bits", "8", "--reps", "1", "--seed", "42"});
  auto second = run({"bench", "--bits", "8", "--reps", "1", "--seed", "42"});
  REQUIRE(first.code == 0);
  CHECK(strip(first.out) == strip(second.out));
  CHECK(first.out.rfind("bits,rep,seed,target,steps,nanos\n", 0) == 0);

  auto checked = run({"bench", "--bits", "16", "--reps", "3", "--format", "json"});
  REQUIRE(checked.code == 0);
  auto doc = ordered_json::parse(checked.out);
  CHECK(doc["mismatches"] == "0");
  std::size_t oracle_rows = 0;
  for (auto& row : doc["rows"]) oracle_rows += row["target"] == "oracle";
  CHECK(oracle_rows == 3);

  CHECK(run({"bench", "--bits", "1"}).code == 2);
  CHECK(run({"bench", "--bits", "x"}).code == 2);
  CHECK(run({"bench"}).code == 2);
}
