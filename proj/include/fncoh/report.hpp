#pragma once

#include "fncoh/check.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fncoh {

/// Configuration of a verification run. Defaults: both structures, mode sweep
/// |k|_inf <= 2 with 200 seeded samples, all suites, json output.
struct SuiteConfig {
    std::string structure = "both";  // g2 | spin7 | both
    long max_mode_norm = 2;
    int sample_count = 200;
    std::uint64_t seed = 715;
    std::vector<std::string> suites = {"identities", "modes", "stabilizers", "symbols",
                                       "torus"};
    std::string output_format = "json";  // json | markdown
    bool inject_failure = false;         // test hook: append one failing record
};

/// Throws std::invalid_argument on malformed fields (usage error, exit 2).
void validateConfig(const SuiteConfig& cfg);

/// Runs the requested suites; deterministic for a fixed config, sorted by
/// (suite, check_id, freq, structure, degree).
std::vector<CheckRecord> runSuite(const SuiteConfig& cfg);

/// json: {"version", "config", "records"} with exact fraction strings;
/// markdown: one table per suite. Byte-identical across runs per config.
std::string emitReport(const SuiteConfig& cfg, const std::vector<CheckRecord>& records);

}  // namespace fncoh
