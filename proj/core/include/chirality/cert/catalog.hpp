#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chirality/cert/certificate.hpp"

namespace chirality {

/// Environment variable overriding the default catalog location.
inline constexpr const char* kCatalogEnvVar = "CHIRALITY_CATALOG";

/// $CHIRALITY_CATALOG when set, else ./chirality-catalog.jsonl.
std::filesystem::path default_catalog_path();

struct CatalogFilter {
  std::optional<std::string> kind;
  std::optional<long> dimension;  // matched against inputs.dimension
  std::optional<std::string> verdict;
};

struct CatalogQueryResult {
  std::vector<Json> records;
  std::vector<std::string> warnings;
};

/// Appends one JSON line under an exclusive advisory lock.
void catalog_append(const Json& certificate, const std::filesystem::path& path);
void catalog_append(const Certificate& certificate, const std::filesystem::path& path);

/// Reads the catalog in file order. Lines that fail to parse or validate are
/// skipped with a warning; later duplicates of a determinism_hash are dropped.
/// A missing file yields an empty result.
CatalogQueryResult catalog_query(const std::filesystem::path& path, const CatalogFilter& filter = {});

}  // namespace chirality
