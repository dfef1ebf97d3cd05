#include "chirality/cert/catalog.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <stdexcept>

namespace chirality {

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv(kCatalogEnvVar); env != nullptr && *env != '\0') return env;
  return "chirality-catalog.jsonl";
}

void catalog_append(const Json& certificate, const std::filesystem::path& path) {
  const std::string line = certificate.dump() + "\n";
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cannot open catalog " + path.string() + ": " + std::strerror(errno));
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw std::runtime_error("cannot lock catalog " + path.string());
  }
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::flock(fd, LOCK_UN);
      ::close(fd);
      throw std::runtime_error("write to catalog failed");
    }
    written += static_cast<std::size_t>(n);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

void catalog_append(const Certificate& certificate, const std::filesystem::path& path) {
  catalog_append(to_json(certificate), path);
}

CatalogQueryResult catalog_query(const std::filesystem::path& path, const CatalogFilter& filter) {
  CatalogQueryResult result;
  std::ifstream in(path);
  if (!in) return result;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
      certificate_from_json(j);
    } catch (const std::exception& e) {
      result.warnings.push_back(path.string() + ":" + std::to_string(line_no) + ": skipped (" + e.what() + ")");
      continue;
    }
    const std::string hash = j.value("determinism_hash", std::string{});
    if (!seen.insert(hash).second) continue;
    if (filter.kind && j.at("kind") != *filter.kind) continue;
    if (filter.verdict && j.at("verdict") != *filter.verdict) continue;
    if (filter.dimension) {
      const Json& inputs = j.at("inputs");
      if (!inputs.contains("dimension") || !inputs.at("dimension").is_number_integer() ||
          inputs.at("dimension").get<long>() != *filter.dimension) {
        continue;
      }
    }
    result.records.push_back(std::move(j));
  }
  return result;
}

}  // namespace chirality
