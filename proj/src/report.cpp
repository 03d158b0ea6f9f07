#include "ncsphere/report.hpp"

#include <algorithm>

namespace ncsphere {

std::string SuiteConfig::digest_text(const std::string& suite) const {
  std::string s = suite;
  s += "|v=" + std::string(kToolkitVersion);
  s += "|N=" + std::to_string(N);
  s += "|D=" + std::to_string(degree);
  s += "|K=" + std::to_string(cap);
  s += "|samples=" + std::to_string(samples);
  s += "|seed=" + std::to_string(seed);
  s += "|explore=" + std::to_string(explore ? 1 : 0);
  return s;
}

int Report::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseRecord& c) { return c.verdict == "pass"; }));
}

int Report::failed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseRecord& c) { return c.verdict == "fail"; }));
}

int Report::skipped() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseRecord& c) { return c.verdict == "skip"; }));
}

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
}

nlohmann::ordered_json report_to_json(const Report& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["config"] = {
      {"n", r.config.N},         {"degree", r.config.degree},   {"cap", r.config.cap},
      {"samples", r.config.samples}, {"seed", r.config.seed},   {"explore", r.config.explore},
  };
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["claim"] = c.claim;
    jc["verdict"] = c.verdict;
    jc["witness"] = c.witness;
    if (include_timings) jc["ms"] = c.ms;
    j["cases"].push_back(std::move(jc));
  }
  j["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}, {"skip", r.skipped()}};
  j["version"] = r.version;
  j["schema"] = kSchemaVersion;
  return j;
}

std::string report_text(const Report& r) {
  std::string out = "suite " + r.suite + " (toolkit " + r.version + ")\n";
  for (const auto& c : r.cases) {
    std::string tag = c.verdict == "pass" ? "PASS" : c.verdict == "fail" ? "FAIL" : "SKIP";
    out += "[" + tag + "] " + c.id;
    if (!c.witness.empty()) out += "  -- " + c.witness;
    out += "  (" + std::to_string(c.ms) + " ms)\n";
  }
  out += "summary: " + std::to_string(r.passed()) + " pass, " + std::to_string(r.failed()) + " fail, " +
         std::to_string(r.skipped()) + " skip\n";
  return out;
}

}  // namespace ncsphere
