#pragma once

#include <string>
#include <vector>

namespace cotwist {

// Accumulating pass/fail record shared by the verification routines.
struct CheckReport {
    std::size_t checks_run = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void add(bool passed, const std::string& what) {
        ++checks_run;
        if (!passed) failures.push_back(what);
    }
    void merge(const CheckReport& other) {
        checks_run += other.checks_run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
    std::string summary() const {
        if (ok()) return "all " + std::to_string(checks_run) + " checks passed";
        std::string s = std::to_string(failures.size()) + "/" + std::to_string(checks_run) +
                        " checks failed";
        for (const auto& f : failures) s += "\n  - " + f;
        return s;
    }
};

}  // namespace cotwist
