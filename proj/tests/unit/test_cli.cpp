#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = demkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dem") {
  CHECK(run({"dem", "--gen", "complete:7"}).json()["value"] == 6);
  CHECK(run({"dem", "--gen", "path:9"}).json()["value"] == 1);
  const auto both = run({"dem", "--gen", "grid:4,4", "--method", "both"}).json();
  CHECK(both["exact"]["value"] == 4);
  CHECK(both["greedy"]["value"] >= 4);
  CHECK(both["exact"]["stats"]["millis"] == 0);
}

TEST_CASE("em, verify, pset") {
  CHECK(run({"em", "--gen", "cycle:4", "--vertex", "0"}).json()["size"] == 2);
  const auto v = run({"verify", "--gen", "complete:4", "--monitors", "0,1"}).json();
  CHECK(v["uncovered"] == nlohmann::json::parse("[[2,3]]"));
  CHECK(v["monitoring"] == false);
  CHECK(run({"pset", "--gen", "doublestar:3,3", "--monitors", "all", "--edge", "centers"}).json()["size"] == 32);
}

TEST_CASE("char always reports the discrepancy field") {
  const auto j = run({"char", "--gen", "cycle:6", "--target", "3"}).json();
  CHECK(j.contains("discrepancy"));
  CHECK(j["direct_match"].is_array());
  CHECK(run({"char", "--gen", "path:4", "--target", "1"}).json()["is_tree"] == true);
  CHECK(run({"char", "--gen", "path:4", "--target", "2"}).code == demkit::cli::kUsage);
}

TEST_CASE("gen round-trips through a file with roles") {
  const Outcome g = run({"gen", "doublestar:2,1"});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("# center1=0\n") != std::string::npos);
  const std::string path = "cli_roundtrip.txt";
  std::ofstream(path) << g.out;
  CHECK(run({"pset", path, "--monitors", "all", "--edge", "centers"}).json()["size"] == 2 * 3 * 2);
}

TEST_CASE("text labels survive into reports") {
  const std::string path = "cli_labels.txt";
  std::ofstream(path) << "4 4\nsw1 sw2\nsw2 sw3\nsw3 sw4\nsw4 sw1\n";
  const auto j = run({"em", path, "--vertex", "sw1"}).json();
  CHECK(j["monitor"] == "sw1");
  CHECK(j["edges"][0][0] == "sw1");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == demkit::cli::kUsage);
  CHECK(run({"dem"}).code == demkit::cli::kUsage);
  const std::string bad = "cli_bad.txt";
  std::ofstream(bad) << "3 2\n0 1\n";
  CHECK(run({"dem", bad}).code == demkit::cli::kUsage);
  const std::string split = "cli_split.txt";
  std::ofstream(split) << "4 2\n0 1\n2 3\n";
  const Outcome d = run({"dem", split});
  CHECK(d.code == demkit::cli::kDisconnected);
  CHECK(d.err.find("component") != std::string::npos);
  const Outcome b = run({"dem", "--gen", "petersen", "--budget", "1"});
  CHECK(b.code == demkit::cli::kBudgetExceeded);
  CHECK(b.json()["exact"] == false);
  CHECK(run({"em", "--gen", "cycle:4", "--vertex", "9"}).code == demkit::cli::kUsage);
  CHECK(run({"dem", "--gen", "cycle:4", "--format", "yaml"}).code == demkit::cli::kUsage);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"dem", "--gen", "petersen", "--method", "both"},
        std::vector<std::string>{"bounds", "--gen", "random:9,0.4", "--seed", "3"},
        std::vector<std::string>{"char", "--gen", "grid:3,3", "--target", "3"},
        std::vector<std::string>{"gen", "ad:4,2,2,2", "--seed", "8"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("other formats") {
  const Outcome dot = run({"verify", "--gen", "complete:4", "--monitors", "0,1", "--format", "dot"});
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  CHECK(dot.out.find("\"2\" -- \"3\" [color=red") != std::string::npos);
  CHECK(dot.out.find("\"0\" [style=filled") != std::string::npos);
  CHECK(run({"em", "--gen", "cycle:4", "--vertex", "0", "--format", "csv"}).out == "u,v\n0,1\n0,3\n");
  CHECK(run({"dem", "--gen", "cycle:5", "--format", "text"}).out.find("exact: dem = 2") == 0);
}
