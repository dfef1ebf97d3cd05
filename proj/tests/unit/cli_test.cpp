#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "chirality/cert/catalog.hpp"
#include "chirality/cert/certificate.hpp"
#include "cli.hpp"

using namespace chirality;

namespace {

struct Outcome {
  int code;
  std::vector<Json> lines;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o{cli::run(args, out, err), {}};
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line.front() == '{') o.lines.push_back(Json::parse(line));
  return o;
}

std::filesystem::path temp_catalog() {
  auto p = std::filesystem::temp_directory_path() / ("chirality-cli-test-" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit code mapping") {
    CHECK(cli::exit_code(Verdict::Pass) == 0);
    CHECK(cli::exit_code(Verdict::Fail) == 1);
    CHECK(cli::exit_code(Verdict::NoObstruction) == 1);
    CHECK(cli::exit_code(Verdict::Inconclusive) == 2);
  }

  TEST_CASE("verdicts drive the exit code") {
    auto o = invoke({"torus", "certify", "--n", "4"});
    CHECK(o.code == 0);
    REQUIRE(o.lines.size() == 1);
    CHECK(o.lines[0]["kind"] == "mapping-torus");
    CHECK(o.lines[0]["verdict"] == "PASS");

    o = invoke({"lens", "chirality", "--t", "5", "--q", "1,1"});
    CHECK(o.code == 1);
    CHECK(o.lines[0]["verdict"] == "FAIL");

    o = invoke({"obstruction", "linking", "--t", "5", "--dim", "3"});
    CHECK(o.code == 1);
    CHECK(o.lines[0]["verdict"] == "NO_OBSTRUCTION");

    o = invoke({"groups", "h4-search", "--count", "3", "--bound", "7"});
    CHECK(o.code == 2);
    CHECK(o.lines[0]["verdict"] == "INCONCLUSIVE");
  }

  TEST_CASE("input errors print an error payload and exit 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"torus", "certify", "--n", "3"},
                                                                  {"lens", "chirality", "--t", "6", "--q", "1,2"},
                                                                  {"dga", "admissible", "--matrix", "1,0;0,1"},
                                                                  {"frobnicate"},
                                                                  {}}) {
      const auto o = invoke(args);
      CHECK(o.code == 2);
      REQUIRE(o.lines.size() == 1);
      CHECK(o.lines[0].contains("error"));
      CHECK(o.lines[0]["exit_code"] == 2);
      CHECK(o.lines[0]["error"].contains("type"));
      CHECK(o.lines[0]["error"].contains("message"));
    }
  }

  TEST_CASE("emitted certificates validate and repeat byte for byte apart from the timestamp") {
    const std::vector<std::string> args{"plan", "--dim", "1", "--max-dim", "12"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == 0);
    REQUIRE(a.lines.size() == 12);
    REQUIRE(b.lines.size() == 12);
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
      const Certificate ca = certificate_from_json(a.lines[i]);
      CHECK(ca.kind == CertificateKind::PlanRecipe);
      CHECK(a.lines[i]["determinism_hash"] == b.lines[i]["determinism_hash"]);
      Json x = a.lines[i], y = b.lines[i];
      x.erase("timestamp");
      y.erase("timestamp");
      CHECK(x.dump() == y.dump());
    }
  }

  TEST_CASE("record and query a catalog") {
    const auto path = temp_catalog();
    const std::string cat = path.string();
    CHECK(invoke({"--catalog", cat, "--record", "torus", "certify", "--n", "2"}).code == 0);
    CHECK(invoke({"--catalog", cat, "--record", "lens", "chirality", "--t", "5", "--q", "1,1"}).code == 1);
    // Re-recording the same body is deduplicated.
    CHECK(invoke({"--catalog", cat, "--record", "torus", "certify", "--n", "2"}).code == 0);
    CHECK(catalog_query(path).records.size() == 2);

    const auto listed = invoke({"--catalog", cat, "catalog", "list", "--verdict", "FAIL"});
    CHECK(listed.code == 0);
    REQUIRE(listed.lines.size() == 1);
    CHECK(listed.lines[0]["kind"] == "lens-chirality");
    std::filesystem::remove(path);
  }

  TEST_CASE("catalog add rejects a tampered certificate") {
    const auto path = temp_catalog();
    auto good = invoke({"lens", "chirality", "--t", "7", "--q", "1,1"}).lines.at(0);
    good["claim"] = "tampered";
    const auto file = path.string() + ".in";
    std::ofstream(file) << good.dump() << '\n';
    const auto o = invoke({"--catalog", path.string(), "catalog", "add", file});
    CHECK(o.code == 2);
    CHECK_FALSE(std::filesystem::exists(path));
    std::filesystem::remove(file);
  }

  TEST_CASE("help and version exit 0") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"--version"}).code == 0);
  }
}
