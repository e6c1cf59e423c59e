#pragma once

// Batch verification: builds presentations from scenarios, runs check
// directives and the built-in suites, and assembles deterministic reports.

#include "cotwist/adhm.hpp"
#include "cotwist/scenario.hpp"

#include <string>
#include <vector>

namespace cotwist {

struct EngineOptions {
    Convention convention = Convention::flip;
    bool classical = false;      // force zeta = 1 (theta = 0)
    int jobs = 1;
    int max_charge = 3;
    AdhmReading adhm_reading = AdhmReading::derived;
    bool timing = false;         // include wall times in reports

    CocycleData cocycle() const {
        if (classical) return CocycleData::classical(2);
        return CocycleData::standard_theta(convention);
    }
};

enum class CheckStatus { pass, fail, not_certified, error };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;   // residual rendering or failure list
    long long millis = 0;
};

struct RunReport {
    std::vector<CheckResult> results;  // sorted by check name

    bool all_passed() const {
        for (const auto& r : results)
            if (r.status != CheckStatus::pass) return false;
        return true;
    }
    // Deterministic unless timing is requested.
    std::string text(bool timing = false) const;
    std::string json(bool timing = false) const;
};

// Executes the scenario's check directives (and any suite directives).
RunReport run_scenario(const Scenario& s, const EngineOptions& opt);
RunReport run_scenario_file(const std::string& path, const EngineOptions& opt);

// Built-in suites: paper-core, cocycle, sphere7, sphere4, basic-instanton,
// charge-one (args r1 r2), calculus, hopf, adhm (args: charge [r1 r2]).
RunReport run_suite(const std::string& name, const std::vector<std::string>& args,
                    const EngineOptions& opt);
std::vector<std::string> builtin_suites();

}  // namespace cotwist
