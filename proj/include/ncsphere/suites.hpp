// The verification suites behind the CLI: each runs deterministically under
// its config and returns a structured report.
#pragma once

#include "ncsphere/report.hpp"

#include <string>
#include <vector>

namespace ncsphere {

std::vector<std::string> suite_names();  // excludes "all"
bool is_known_suite(const std::string& name);

// Runs one suite (or "all"), consulting the on-disk cache unless disabled.
Report run_suite(const std::string& name, const SuiteConfig& config);

Report run_signature_suite(const SuiteConfig& config);
Report run_prop24_suite(const SuiteConfig& config);
Report run_parametrization_suite(const SuiteConfig& config);
Report run_vanish_degree_suite(const SuiteConfig& config);
Report run_weak_saturation_suite(const SuiteConfig& config);
Report run_sphere_intersections_suite(const SuiteConfig& config);
Report run_independence_suite(const SuiteConfig& config);
Report run_quantum_relations_suite(const SuiteConfig& config);

}  // namespace ncsphere
