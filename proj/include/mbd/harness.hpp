#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mbd {

struct HarnessRecord {
    int id = 0;
    std::string check;
    std::string instance;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct HarnessReport {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<HarnessRecord> records;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

/// The available suite names.
const std::vector<std::string>& harness_suites();

/// Runs one suite. Deterministic in (suite, seed, count); instances are
/// distributed over MBDOM_WORKERS threads (default 1) and records are
/// emitted in instance order either way. Unknown suite names are an input
/// error; check failures are data, not errors.
HarnessReport run_verification_harness(const std::string& suite, std::uint64_t seed, int count);

std::string report_to_text(const HarnessReport& report);
nlohmann::json report_to_json(const HarnessReport& report);

} // namespace mbd
