// Structured verdicts of the verification suites and their JSON rendering.
#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ncsphere {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct SuiteConfig {
  int N = 3;
  int degree = 4;  // ideal-span degree bound D
  int cap = 6;     // filtered-family level cap K
  int samples = 0; // 0 = per-suite default
  std::uint64_t seed = 0;
  unsigned jobs = 0;  // 0 = hardware concurrency
  bool no_cache = false;
  bool explore = false;

  // The part of the config that determines results (jobs and caching do not).
  std::string digest_text(const std::string& suite) const;
};

struct CaseRecord {
  std::string id;
  std::string claim;
  std::string verdict;  // "pass" | "fail" | "skip"
  std::string witness;
  double ms = 0.0;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseRecord> cases;
  std::string version = kToolkitVersion;

  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
  void sort_cases();
};

nlohmann::ordered_json report_to_json(const Report& r, bool include_timings = true);
std::string report_text(const Report& r);

}  // namespace ncsphere
