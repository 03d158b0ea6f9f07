#include "ncsphere/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace ncsphere {

std::string cache_directory() {
  if (const char* env = std::getenv("NCSPHERE_CACHE_DIR"); env && *env) return env;
  return ".ncsphere-cache";
}

std::uint64_t config_digest(const std::string& suite, const SuiteConfig& config) {
  // FNV-1a over the canonical config text
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : config.digest_text(suite)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::filesystem::path cache_file(const std::string& suite, std::uint64_t digest) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  return std::filesystem::path(cache_directory()) / (suite + "-" + hex + ".json");
}

}  // namespace

std::optional<std::vector<CaseRecord>> cache_load(const std::string& suite, std::uint64_t digest) {
  auto path = cache_file(suite, digest);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema").get<int>() != kSchemaVersion || j.at("suite").get<std::string>() != suite ||
        j.at("digest").get<std::string>() != std::to_string(digest)) {
      std::cerr << "warning: discarding mismatched cache entry " << path.string() << "\n";
      return std::nullopt;
    }
    std::vector<CaseRecord> cases;
    for (const auto& jc : j.at("cases")) {
      CaseRecord c;
      c.id = jc.at("id").get<std::string>();
      c.claim = jc.at("claim").get<std::string>();
      c.verdict = jc.at("verdict").get<std::string>();
      c.witness = jc.at("witness").get<std::string>();
      c.ms = jc.at("ms").get<double>();
      cases.push_back(std::move(c));
    }
    return cases;
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding corrupt cache entry " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void cache_store(const std::string& suite, std::uint64_t digest, const std::vector<CaseRecord>& cases) {
  std::error_code ec;
  std::filesystem::create_directories(cache_directory(), ec);
  if (ec) return;
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["digest"] = std::to_string(digest);
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases)
    j["cases"].push_back({{"id", c.id}, {"claim", c.claim}, {"verdict", c.verdict}, {"witness", c.witness}, {"ms", c.ms}});
  std::ofstream out(cache_file(suite, digest));
  out << j.dump(1) << "\n";
}

}  // namespace ncsphere
