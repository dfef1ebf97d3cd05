#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "chirality/exact/matrix.hpp"
#include "chirality/exact/polynomial.hpp"

namespace chirality {

using Json = nlohmann::json;

/// Outcome of a single check, and of a whole certificate.
///
/// PASS certifies the claim. FAIL refutes it (usually with a witness).
/// INCONCLUSIVE means the sufficient conditions did not apply. NO_OBSTRUCTION
/// means an obstruction test found nothing, which is not a disproof.
enum class Verdict { Pass, Fail, Inconclusive, NoObstruction };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Fail dominates, then Inconclusive, then NoObstruction, then Pass.
Verdict combine(Verdict a, Verdict b);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  Json data = Json::object();
  /// Advisory checks are recorded but never lower the overall verdict.
  bool mandatory = true;
};

enum class CertificateKind {
  MappingTorus,
  LensChirality,
  LensMinOrder,
  DgaDim9,
  DgaDim13,
  PlanRecipe,
  GroupsH4,
  Obstruction,
};

std::string_view to_string(CertificateKind k);
CertificateKind kind_from_string(std::string_view s);

inline constexpr int kSchemaVersion = 1;
std::string_view tool_version();

struct Certificate {
  CertificateKind kind = CertificateKind::Obstruction;
  std::string claim;
  Json inputs = Json::object();
  std::vector<Check> checks;
  Json witnesses = Json::object();
  /// Named results the claim rests on, e.g. "olum-degree-theorem".
  std::vector<std::string> references;
  /// Wall-clock creation time; excluded from the determinism hash.
  std::string timestamp;

  /// Combination of all mandatory check verdicts; PASS for no checks.
  Verdict verdict() const;
  Certificate& add(Check c) {
    checks.push_back(std::move(c));
    return *this;
  }
};

/// Everything except timestamp and hash, with canonical (sorted) key order.
Json canonical_body(const Certificate& c);
/// Lowercase hex SHA-256 of the compact dump of canonical_body.
std::string determinism_hash(const Certificate& c);
/// Full wire form: canonical body plus timestamp and determinism_hash.
Json to_json(const Certificate& c);
/// Inverse of to_json. Throws std::invalid_argument on schema violations,
/// including a determinism_hash that does not match the content.
Certificate certificate_from_json(const Json& j);

std::string current_utc_timestamp();

/// Integers beyond the 53-bit safe range are written as decimal strings.
Json to_json(const mpz_class& v);
Json to_json_u64(std::uint64_t v);
mpz_class mpz_from_json(const Json& j);
Json to_json(const exact::IntMatrix& m);
Json to_json(const exact::IntPolynomial& p);
exact::IntMatrix int_matrix_from_json(const Json& j);

}  // namespace chirality
