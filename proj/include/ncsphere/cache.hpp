// Content-addressed on-disk cache of suite case records, keyed by a digest of
// (suite, result-determining config, toolkit version). Corrupt entries are
// discarded with a warning, never trusted.
#pragma once

#include "ncsphere/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncsphere {

// NCSPHERE_CACHE_DIR overrides the default ".ncsphere-cache".
std::string cache_directory();

std::uint64_t config_digest(const std::string& suite, const SuiteConfig& config);

std::optional<std::vector<CaseRecord>> cache_load(const std::string& suite, std::uint64_t digest);
void cache_store(const std::string& suite, std::uint64_t digest, const std::vector<CaseRecord>& cases);

}  // namespace ncsphere
