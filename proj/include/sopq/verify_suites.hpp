#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sopq/json_io.hpp"
#include "sopq/signature.hpp"

namespace sopq {

// Randomized property suites behind the CLI `verify` subcommand. Each
// suite runs its module's invariants at a configurable scale and reports
// failure counts and worst residuals. Runs are deterministic in the seed.

struct SuiteConfig {
    double tol = 1e-9;
    std::uint64_t seed = 42;
    int samples = 1000;
    std::optional<Signature> sig;  // restrict signature-driven suites
};

struct CheckResult {
    std::string name;
    int samples = 0;
    int failures = 0;
    double worst_residual = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
};

SuiteReport run_fibration_suite(const SuiteConfig& cfg);
SuiteReport run_polar_suite(const SuiteConfig& cfg);
SuiteReport run_homeo_suite(const SuiteConfig& cfg);
SuiteReport run_abelian_suite(const SuiteConfig& cfg);
std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg);

Json to_json(const SuiteReport& r);

}  // namespace sopq
