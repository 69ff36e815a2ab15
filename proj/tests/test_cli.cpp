#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ramify::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("counting verbs") {
  auto r = run({"cofm", "--m", "1", "--convention", "both"});
  CHECK(r.code == 0);
  CHECK(r.parsed() == json{{"m", 1}, {"eq12", 2}, {"multiset", 2}});
  r = run({"cofm", "--m", "2", "--convention", "multiset"});
  CHECK(r.parsed() == json{{"m", 2}, {"multiset", 6}});
  CHECK(run({"cofm", "--m", "0"}).code == 2);
  CHECK(run({"cofm", "--m", "1", "--convention", "other"}).code == 2);

  r = run({"pcount", "--n", "7"});
  CHECK(r.parsed()["partitions"] == 15);

  r = run({"types", "--m", "1"});
  CHECK(r.parsed()["types"] == json::parse("[[[3]],[[2,2]]]"));
  r = run({"types", "--m", "2", "--n", "4"});
  CHECK(r.parsed()["count"] == 6);

  r = run({"admissible", "--m", "2"});
  CHECK(r.parsed() == json{{"m", 2}, {"combinatorial", 5}, {"affine", 6}});
  r = run({"admissible", "--type", "[[2,2,2]]", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["combinatorial"] == false);
  CHECK(run({"admissible", "--type", "[[1]]", "--n", "4"}).code == 2);
  CHECK(run({"admissible", "--type", "[[2]", "--n", "4"}).code == 2);
}

TEST_CASE("usage errors exit 2 before any computation") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"census", "--n", "3", "--p", "5", "--bogus"}).code == 2);
  CHECK(run({"census", "--p", "5"}).code == 2);
  CHECK(run({"census", "--n", "3", "--p", "4"}).code == 2);
  CHECK(run({"census", "--n", "3", "--p", "3"}).code == 2);
  CHECK(run({"census", "--n", "3", "--q", "12"}).code == 2);
  CHECK(run({"census", "--n", "3", "--p", "5", "--budget", "1e2"}).code == 2);
  CHECK(run({"census", "--n", "3", "--p", "5", "--budget", "lots"}).code == 2);
  CHECK(run({"poset", "--n", "7"}).code == 2);
  CHECK(run({"poset", "--n", "3", "--checks", "graded,nope"}).code == 2);
  CHECK(run({"adjudicate", "--m", "1", "--n", "2", "--p", "5"}).code == 2);
  CHECK(run({"adjudicate", "--m", "1", "--n", "3", "--p", "4"}).code == 2);
}

TEST_CASE("census output") {
  auto r = run({"census", "--n", "2", "--m", "1", "--p", "5", "--histogram"});
  CHECK(r.code == 0);
  const json j = r.parsed();
  CHECK(j["count"] == "20");
  CHECK(j["q"] == 5);
  CHECK(j["histogram"] == json{{"0", "20"}, {"1", "5"}, {"2", "0"}});

  r = run({"census", "--n", "2", "--p", "5", "--csv"});
  CHECK(r.out == "length,count\n0,20\n1,5\n2,0\n");

  // --q is shorthand for --p/--d
  CHECK(run({"census", "--n", "3", "--q", "25"}).out == run({"census", "--n", "3", "--p", "5", "--d", "2"}).out);
  CHECK(run({"census", "--n", "3", "--q", "25", "--p", "5", "--d", "2"}).code == 0);
  CHECK(run({"census", "--n", "3", "--q", "25", "--p", "7"}).code == 2);
}

TEST_CASE("output is independent of --jobs") {
  const auto one = run({"census", "--n", "4", "--m", "2", "--p", "11", "--histogram", "--jobs", "1"});
  const auto three = run({"census", "--n", "4", "--m", "2", "--p", "11", "--histogram", "--jobs", "3"});
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
}

TEST_CASE("verify exit codes follow the verdict") {
  auto r = run({"verify", "--n", "2", "--m", "1", "--p", "5"});
  CHECK(r.code == 1);
  json j = r.parsed();
  CHECK(j["verdict"] == "matches-neither");
  CHECK(j["flags"] == json::array({"n<3m"}));
  CHECK(j["predicted"] == json{{"eq12", "15"}, {"multiset", "15"}});

  r = run({"verify", "--n", "3", "--m", "1", "--p", "5"});
  j = r.parsed();
  CHECK(r.code == (j["verdict"] == "matches-neither" ? 1 : 0));
  CHECK(j["flags"].empty());
}

TEST_CASE("adjudicate") {
  const auto r = run({"adjudicate", "--m", "1", "--n", "3", "--p", "5,7"});
  const json j = r.parsed();
  CHECK(j["fields"].size() == 2);
  CHECK(j["candidates"] == json{{"eq12", "2"}, {"multiset", "2"}});
  CHECK(r.code == (j["supported"] == "none" ? 1 : 0));
  CHECK(run({"adjudicate", "--m", "1", "--n", "3", "--p", "5", "--p", "7"}).out == r.out);
}

TEST_CASE("poset reports") {
  auto r = run({"poset", "--n", "2", "--checks", "graded"});
  CHECK(r.code == 0);
  json j = r.parsed();
  CHECK(j["size"] == 2);
  CHECK(j["checks"]["graded"]["pass"] == true);
  CHECK(j["elements"][1] == json{{"rho1", {{1, 2}}}, {"rho2", {{1, 2}}}, {"l", 1}});

  r = run({"poset", "--n", "3"});
  CHECK(r.code == 0);
  j = r.parsed();
  CHECK(j["size"] == 8);
  CHECK(j["covers"].size() == 12);
  for (const char* check : {"graded", "semimodular", "vanishing", "euler-mobius"}) CHECK(j["checks"][check]["pass"] == true);
  CHECK(j["checks"]["orbits"]["count_by_length"]["1"] == 2);
  const json inv = j["checks"]["invariants"];
  CHECK(inv["all_zero"] == false);
  REQUIRE(inv["entries"].size() == 1);
  CHECK(inv["entries"][0]["invariants"] == json{{"0", 1}});

  r = run({"poset", "--n", "3", "--m", "2", "--checks", "graded,vanishing"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["quotient"]["size"] == 2);
}

TEST_CASE("--out persists the record") {
  const std::string path = "cli_out_test.json";
  const auto r = run({"census", "--n", "2", "--p", "7", "--out", path});
  CHECK(r.code == 0);
  std::ifstream file(path);
  REQUIRE(file);
  const json saved = json::parse(file);
  CHECK(saved["count"] == r.parsed()["count"]);
  std::remove(path.c_str());
}
