#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "arrcoh/cli.hpp"

using namespace arrcoh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ARRCOH_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("betti on the k-equal builtin") {
  auto r = run({"betti", "--builtin", "kequal:6:3"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["betti_cm"] == j["betti_gm"]);
  CHECK(j["betti_cm"]["0"] == 1);
  CHECK(j["betti_cm"]["3"] == 20);
  CHECK(j["betti_cm"]["4"] == 45);
  CHECK(j["betti_cm"]["5"] == 36);
  CHECK(j["betti_cm"]["6"] == 20);
  CHECK(j["betti_cm"]["7"] == 10);
  CHECK(j["betti_cm"].size() == 6);
  CHECK(j.contains("kequal_table"));
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"ring", "--builtin", "braid:4"},
                                        std::vector<std::string>{"kequal", "--n", "5", "--k", "3"},
                                        std::vector<std::string>{"betti", "--builtin", "boolean:3", "--format", "tsv"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("data files") {
  auto r = run({"betti", "--input", data("three_lines.json")});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["betti_cm"]["1"] == 3);
  CHECK(j["betti_cm"]["2"] == 2);

  auto k = run({"betti", "--input", data("kequal43.json")});
  REQUIRE(k.code == kExitOk);
  auto jk = nlohmann::json::parse(k.out);
  CHECK(jk["betti_cm"]["3"] == 4);
  CHECK(jk["betti_cm"]["4"] == 3);

  CHECK(run({"verify", "--input", data("torus2.json")}).code == kExitOk);
  CHECK(run({"dcp-check", "--input", data("one_line.json"), "--max-degree", "4"}).code == kExitOk);
}

TEST_CASE("ring JSON round trips through the parser") {
  auto r = run({"ring", "--builtin", "boolean:2"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(nlohmann::json::parse(j.dump(2)) == j);
  CHECK(j["basis"].size() == 4);
}

TEST_CASE("present and kequal subcommands") {
  auto p = run({"present", "geometric", "--builtin", "braid:4"});
  CHECK(p.code == kExitOk);
  CHECK(run({"present", "geometric", "--builtin", "kequal:6:3"}).code == kExitValidation);
  auto k = run({"kequal", "--n", "6", "--k", "3", "--format", "tsv"});
  CHECK(k.code == kExitOk);
  CHECK(k.out.find("FAIL") == std::string::npos);
}

TEST_CASE("invalid input exits with the validation code") {
  CHECK(run({"verify", "--input", data("nonmonotone.json")}).code == kExitValidation);
  CHECK(run({"betti", "--input", data("missing.json")}).code == kExitValidation);
  CHECK(run({"betti"}).code == kExitValidation);
  CHECK(run({"betti", "--builtin", "boolean:2", "--input", data("torus2.json")}).code == kExitValidation);
  CHECK(run({"betti", "--builtin", "nonsense"}).code == kExitValidation);
  CHECK(run({"frobnicate"}).code == kExitValidation);
  CHECK(run({"dcp-check", "--builtin", "oneline", "--max-degree", "1"}).code == kExitValidation);
  CHECK(run({"kequal", "--n", "9", "--k", "3"}).code == kExitValidation);
}
