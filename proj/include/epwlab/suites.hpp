#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "epwlab/scalar.hpp"

namespace epwlab::cli {

// One verified statement: a machine-checkable claim, its outcome, and a
// small JSON witness (counts, pinned values, sample sizes) that lets a
// reader audit what was actually computed.
struct CheckRecord {
    std::string name;
    std::string claim;
    std::string status;  // "pass" | "fail"
    nlohmann::json witness;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    exactalg::field_t field = -1;  // -1: per-suite default (Q, 3 or 5)
    int samples = 200;
    long bound = 3;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    exactalg::field_t field = 0;
    std::vector<std::string> out_of_scope;
    std::vector<CheckRecord> checks;
    long duration_ms = 0;

    bool all_passed() const;
};

// Statements adjacent to what the suites verify but deliberately not
// computed here; recorded in every report header.
const std::vector<std::string>& out_of_scope_notes();

// name in {"lattice", "mukai", "epw-oracle", "epw-duality", "all"};
// anything else raises precondition_error.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

nlohmann::json report_to_json(const SuiteReport& report);
SuiteReport report_from_json(const nlohmann::json& j);

}  // namespace epwlab::cli
