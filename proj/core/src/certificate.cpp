#include "chirality/cert/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <stdexcept>

namespace chirality {
namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdictNames{{
    {Verdict::Pass, "PASS"},
    {Verdict::Fail, "FAIL"},
    {Verdict::Inconclusive, "INCONCLUSIVE"},
    {Verdict::NoObstruction, "NO_OBSTRUCTION"},
}};

constexpr std::array<std::pair<CertificateKind, std::string_view>, 8> kKindNames{{
    {CertificateKind::MappingTorus, "mapping-torus"},
    {CertificateKind::LensChirality, "lens-chirality"},
    {CertificateKind::LensMinOrder, "lens-min-order"},
    {CertificateKind::DgaDim9, "dga-dim9"},
    {CertificateKind::DgaDim13, "dga-dim13"},
    {CertificateKind::PlanRecipe, "plan-recipe"},
    {CertificateKind::GroupsH4, "groups-h4"},
    {CertificateKind::Obstruction, "obstruction"},
}};

int severity(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::NoObstruction: return 1;
    case Verdict::Inconclusive: return 2;
    case Verdict::Fail: return 3;
  }
  return 3;
}

const mpz_class& safe_limit() {
  static const mpz_class limit("9007199254740991");
  return limit;
}

}  // namespace

std::string_view to_string(Verdict v) {
  for (const auto& [value, name] : kVerdictNames)
    if (value == v) return name;
  return "FAIL";
}

Verdict verdict_from_string(std::string_view s) {
  for (const auto& [value, name] : kVerdictNames)
    if (name == s) return value;
  throw std::invalid_argument("unknown verdict: " + std::string(s));
}

Verdict combine(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

std::string_view to_string(CertificateKind k) {
  for (const auto& [value, name] : kKindNames)
    if (value == k) return name;
  return "obstruction";
}

CertificateKind kind_from_string(std::string_view s) {
  for (const auto& [value, name] : kKindNames)
    if (name == s) return value;
  throw std::invalid_argument("unknown certificate kind: " + std::string(s));
}

std::string_view tool_version() { return CHIRALITY_VERSION; }

Verdict Certificate::verdict() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks)
    if (c.mandatory) v = combine(v, c.verdict);
  return v;
}

Json canonical_body(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks) {
    checks.push_back({{"name", ch.name},
                      {"verdict", to_string(ch.verdict)},
                      {"mandatory", ch.mandatory},
                      {"data", ch.data}});
  }
  return {
      {"schema_version", kSchemaVersion},
      {"tool_version", tool_version()},
      {"kind", to_string(c.kind)},
      {"claim", c.claim},
      {"verdict", to_string(c.verdict())},
      {"inputs", c.inputs},
      {"checks", checks},
      {"witnesses", c.witnesses},
      {"references", c.references},
  };
}

std::string determinism_hash(const Certificate& c) {
  const std::string body = canonical_body(c).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(body.data(), body.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

Json to_json(const Certificate& c) {
  Json j = canonical_body(c);
  j["timestamp"] = c.timestamp;
  j["determinism_hash"] = determinism_hash(c);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    Certificate c;
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.claim = j.at("claim").get<std::string>();
    c.inputs = j.at("inputs");
    for (const auto& ch : j.at("checks")) {
      c.checks.push_back({ch.at("name").get<std::string>(),
                          verdict_from_string(ch.at("verdict").get<std::string>()),
                          ch.at("data"), ch.at("mandatory").get<bool>()});
    }
    c.witnesses = j.at("witnesses");
    c.references = j.at("references").get<std::vector<std::string>>();
    c.timestamp = j.value("timestamp", std::string{});
    if (j.contains("determinism_hash") && j.at("determinism_hash").get<std::string>() != determinism_hash(c)) {
      throw std::invalid_argument("determinism_hash does not match certificate content");
    }
    if (j.at("verdict").get<std::string>() != to_string(c.verdict())) {
      throw std::invalid_argument("recorded verdict disagrees with checks");
    }
    return c;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

std::string current_utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const mpz_class& v) {
  if (abs(v) <= safe_limit()) return Json(mpz_get_si(v.get_mpz_t()));
  return Json(v.get_str());
}

Json to_json_u64(std::uint64_t v) {
  if (v <= 9007199254740991ULL) return Json(v);
  return Json(std::to_string(v));
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer or decimal string");
}

Json to_json(const exact::IntMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const exact::IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return {{"coefficients", coeffs}, {"text", p.to_string()}};
}

exact::IntMatrix int_matrix_from_json(const Json& j) {
  std::vector<mpz_class> entries;
  for (const auto& e : j.at("entries")) entries.push_back(mpz_from_json(e));
  return {j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), std::move(entries)};
}

}  // namespace chirality
