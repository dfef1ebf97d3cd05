#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "chirality/cert/catalog.hpp"
#include "chirality/cert/certificate.hpp"

using namespace chirality;

namespace {

Certificate sample(Verdict v = Verdict::Pass, long dimension = 3) {
  Certificate c;
  c.kind = CertificateKind::Obstruction;
  c.claim = "sample claim";
  c.inputs = {{"dimension", dimension}, {"t", 6}};
  c.add({"first", Verdict::Pass, {{"x", 1}}});
  c.add({"second", v, Json::object()});
  c.references = {"sample-reference"};
  c.timestamp = "2000-01-01T00:00:00Z";
  return c;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("certificate") {
  TEST_CASE("combine ranks FAIL over INCONCLUSIVE over NO_OBSTRUCTION over PASS") {
    const Verdict order[] = {Verdict::Pass, Verdict::NoObstruction, Verdict::Inconclusive, Verdict::Fail};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(combine(order[i], order[j]) == order[std::max(i, j)]);
  }

  TEST_CASE("verdict ignores advisory checks") {
    Certificate c = sample();
    c.add({"advisory", Verdict::Fail, Json::object(), false});
    CHECK(c.verdict() == Verdict::Pass);
    c.add({"mandatory", Verdict::Inconclusive, Json::object()});
    CHECK(c.verdict() == Verdict::Inconclusive);
    CHECK(Certificate{}.verdict() == Verdict::Pass);
  }

  TEST_CASE("round trip preserves content and hash") {
    const Certificate c = sample(Verdict::NoObstruction);
    const Json j = to_json(c);
    const Certificate back = certificate_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(determinism_hash(back) == determinism_hash(c));
    CHECK(j.at("determinism_hash").get<std::string>().size() == 64);
  }

  TEST_CASE("timestamp does not affect the hash") {
    Certificate a = sample();
    Certificate b = sample();
    b.timestamp = "2030-12-31T23:59:59Z";
    CHECK(determinism_hash(a) == determinism_hash(b));
    CHECK(canonical_body(a) == canonical_body(b));
    b.claim += ".";
    CHECK(determinism_hash(a) != determinism_hash(b));
  }

  TEST_CASE("tampered or malformed certificates are rejected") {
    Json j = to_json(sample());
    j["claim"] = "changed";
    CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
    Json v = to_json(sample());
    v["verdict"] = "FAIL";
    CHECK_THROWS_AS(certificate_from_json(v), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "obstruction"}}), std::invalid_argument);
  }

  TEST_CASE("integers beyond 2^53 serialize as decimal strings") {
    const mpz_class small = 9007199254740991;  // 2^53 - 1
    const mpz_class big = mpz_class("9007199254740993");
    CHECK(to_json(small).is_number_integer());
    CHECK(to_json(big).is_string());
    CHECK(mpz_from_json(to_json(big)) == big);
    CHECK(mpz_from_json(to_json(mpz_class(-big))) == -big);
    const exact::IntMatrix m = exact::IntMatrix::from_rows({{big, 1}, {-2, 0}});
    CHECK(int_matrix_from_json(to_json(m)) == m);
  }

  TEST_CASE("kind and verdict names") {
    for (auto k : {CertificateKind::MappingTorus, CertificateKind::LensChirality, CertificateKind::LensMinOrder,
                   CertificateKind::DgaDim9, CertificateKind::DgaDim13, CertificateKind::PlanRecipe,
                   CertificateKind::GroupsH4, CertificateKind::Obstruction})
      CHECK(kind_from_string(to_string(k)) == k);
    CHECK(to_string(CertificateKind::DgaDim13) == "dga-dim13");
    CHECK(to_string(Verdict::NoObstruction) == "NO_OBSTRUCTION");
    CHECK_THROWS(verdict_from_string("MAYBE"));
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("append then query by kind, dimension and verdict") {
    TempFile f("chirality-catalog-test-1.jsonl");
    catalog_append(sample(Verdict::Pass, 3), f.path);
    catalog_append(sample(Verdict::Fail, 7), f.path);
    CHECK(catalog_query(f.path).records.size() == 2);
    CHECK(catalog_query(f.path, {.kind = "obstruction"}).records.size() == 2);
    CHECK(catalog_query(f.path, {.kind = "mapping-torus"}).records.empty());
    CHECK(catalog_query(f.path, {.dimension = 7}).records.size() == 1);
    CHECK(catalog_query(f.path, {.verdict = "FAIL"}).records.at(0).at("inputs").at("dimension") == 7);
  }

  TEST_CASE("duplicate hashes are deduplicated and corrupt lines skipped") {
    TempFile f("chirality-catalog-test-2.jsonl");
    Certificate c = sample();
    catalog_append(c, f.path);
    c.timestamp = "2001-01-01T00:00:00Z";
    catalog_append(c, f.path);
    {
      std::ofstream out(f.path, std::ios::app);
      out << "{not json\n";
    }
    catalog_append(sample(Verdict::Fail), f.path);
    const auto result = catalog_query(f.path);
    CHECK(result.records.size() == 2);
    CHECK(result.warnings.size() == 1);
  }

  TEST_CASE("missing catalog is empty; environment overrides the default path") {
    CHECK(catalog_query("/nonexistent/dir/catalog.jsonl").records.empty());
    setenv(kCatalogEnvVar, "/tmp/from-env.jsonl", 1);
    CHECK(default_catalog_path() == std::filesystem::path("/tmp/from-env.jsonl"));
    unsetenv(kCatalogEnvVar);
    CHECK(default_catalog_path() == std::filesystem::path("chirality-catalog.jsonl"));
  }
}
