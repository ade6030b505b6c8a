#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"schubert"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = schubert::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("roots") {
    const Run g2 = run({"roots", "--type", "G2", "--format", "json"});
    REQUIRE(g2.code == 0);
    const json doc = json::parse(g2.out);
    CHECK(doc["root_count"] == 12);
    CHECK(doc["highest_root"]["length"] == "long");
    CHECK(doc["highest_root"]["root_coords"] == json::array({3, 2}));
    CHECK(doc["labeling"]["simple_roots"][0]["length"] == "short");
    CHECK(doc["engine_version"] == "0.1.0");
    CHECK(json::parse(run({"roots", "--type", "A1", "--format", "json"}).out)["root_count"] == 2);
    CHECK(run({"roots", "--type", "A1"}).out.find("|R| = 2") != std::string::npos);
    CHECK(run({"roots", "--type", "H3"}).code == 2);
    CHECK(run({"roots"}).code == 2);
  }

  TEST_CASE("demazure") {
    const Run anchor = run({"demazure", "--type", "A2", "--word", "2,1", "--weight-root", "1,1", "--format", "json"});
    REQUIRE(anchor.code == 0);
    const json doc = json::parse(anchor.out);
    CHECK(doc["terms"] == 5);
    CHECK(doc["word"] == json::array({2, 1}));
    CHECK(doc["weight"] == json::array({1, 1}));

    const Run zero = run({"demazure", "--type", "A2", "--word", "1", "--weight-fund", "-1,0"});
    CHECK(zero.code == 0);
    CHECK(zero.out.find("= 0\n") != std::string::npos);

    const Run echo = run({"demazure", "--type", "A2", "--word", "", "--weight-fund", "1,0"});
    CHECK(echo.code == 0);
    CHECK(echo.out.find("= e^(1,0)\n") != std::string::npos);

    CHECK(run({"demazure", "--type", "A2", "--word", "3", "--weight-fund", "1,0"}).code == 2);
    CHECK(run({"demazure", "--type", "A2", "--word", "1", "--weight-fund", "1"}).code == 2);
    CHECK(run({"demazure", "--type", "A2", "--word", "1", "--weight-fund", "1,x"}).code == 2);
    CHECK(run({"demazure", "--type", "A2", "--word", "1"}).code == 2);
    CHECK(run({"demazure", "--type", "A2", "--word", "1", "--weight-fund", "1,0", "--weight-root", "1,0"}).code == 2);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "thmA", "--type", "A3"}).code == 0);
    CHECK(run({"verify", "thmA", "--type", "B2"}).code == 2);
    CHECK(run({"verify", "thmB", "--type", "A2"}).code == 2);
    CHECK(run({"verify", "remarkB2", "--type", "B3"}).code == 2);
    CHECK(run({"verify", "thmC_typeA", "--type", "D4"}).code == 2);
    CHECK(run({"verify", "nonsense", "--type", "A2"}).code == 2);
    CHECK(run({"verify", "--type", "A2"}).code == 2);
    CHECK(run({"verify", "thm42", "--type", "A3", "--alpha", "2"}).code == 0);
    CHECK(run({"verify", "thm42", "--type", "A3", "--alpha", "4"}).code == 2);
    CHECK(run({"verify", "thmA", "--type", "A3", "--alpha", "1"}).code == 2);
    CHECK(run({"verify", "thmA", "--type", "A3", "--workers", "0"}).code == 2);
    CHECK(run({"verify", "thmA", "--type", "A3", "--format", "xml"}).code == 2);
  }

  TEST_CASE("lemma61 on B2 names alpha_2 and beta = alpha_1") {
    const Run r = run({"verify", "lemma61", "--type", "B2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["details"]["alpha"] == 2);
    CHECK(doc["details"]["beta_root_coords"] == json::array({1, 0}));
    CHECK(doc["details"]["image_root_coords"] == json::array({1, 1}));
  }

  TEST_CASE("report schema and canonical round trip") {
    for (const char* check : {"thmA", "thm42", "lemma26", "lemma54_56", "prop51", "thmC_typeA", "cor52_53_58"}) {
      CAPTURE(check);
      const Run r = run({"verify", check, "--type", "A3", "--format", "json"});
      REQUIRE(r.code == 0);
      const json doc = json::parse(r.out);
      for (const char* key : {"check", "type", "universe", "passed", "counterexamples", "elapsed_ms", "engine_version",
                              "labeling"}) {
        CHECK(doc.contains(key));
      }
      CHECK(doc["check"] == check);
      CHECK(doc["type"] == "A3");
      CHECK(doc["passed"] == true);
      CHECK(doc["counterexamples"].empty());
      CHECK(doc.dump(2) + "\n" == r.out);
    }
    const Run sweep = run({"sweep", "--type", "B2", "--format", "json"});
    REQUIRE(sweep.code == 0);
    const json doc = json::parse(sweep.out);
    CHECK(doc.dump(2) + "\n" == sweep.out);
    std::vector<std::string> names;
    for (const auto& c : doc["details"]["checks"]) names.push_back(c["check"]);
    CHECK(names == std::vector<std::string>{"prop51", "thmB", "lemma61", "remarkB2"});
  }

  TEST_CASE("sweep output does not depend on the worker count") {
    auto strip = [](std::string text) {
      json doc = json::parse(text);
      doc.erase("elapsed_ms");
      for (auto& c : doc["details"]["checks"]) c.erase("elapsed_ms");
      return doc.dump();
    };
    const Run one = run({"sweep", "--type", "A3", "--format", "json"});
    const Run many = run({"sweep", "--type", "A3", "--format", "json", "--workers", "4"});
    REQUIRE(one.code == 0);
    REQUIRE(many.code == 0);
    CHECK(strip(one.out) == strip(many.out));
  }

  TEST_CASE("guard from flag and environment") {
    CHECK(run({"sweep", "--type", "E8"}).code == 2);
    CHECK(run({"verify", "thmA", "--type", "A3", "--guard", "10"}).code == 2);
    ::setenv("SCHUBERT_GUARD", "10", 1);
    CHECK(run({"verify", "thmA", "--type", "A3"}).code == 2);
    CHECK(run({"verify", "thmA", "--type", "A3", "--guard", "24"}).code == 0);
    ::setenv("SCHUBERT_GUARD", "100", 1);
    CHECK(run({"sweep", "--type", "A3"}).code == 0);
    CHECK(run({"sweep", "--type", "A5"}).code == 2);
    ::unsetenv("SCHUBERT_GUARD");
  }

  TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "schubert_cli_out_test.json";
    std::filesystem::remove(path);
    const std::string p = path.string();
    const Run r = run({"verify", "lemma26", "--type", "D4", "--format", "json", "--out", p.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const json doc = json::parse(in);
    CHECK(doc["check"] == "lemma26");
    std::filesystem::remove(path);
    CHECK(run({"verify", "lemma26", "--type", "D4", "--out", "/nonexistent-dir/x.json"}).code == 2);
  }

  TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 2);
  }
}
