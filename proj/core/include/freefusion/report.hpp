#pragma once

#include <string>
#include <utility>
#include <vector>

namespace freefusion {

// Outcome of one bounded verification (a lemma scan, a validation, a gallery
// cross-check).  All fields are deterministic for a fixed configuration;
// `seconds` is informational only and excluded from serialization unless
// timing output is requested.
struct CheckResult {
    std::string id;
    std::string status = "pass"; // "pass" | "fail" | "refused"
    bool overflow = false;       // truncation reached; result covers a partial scan
    std::vector<std::pair<std::string, std::string>> bounds;
    std::vector<std::string> counterexamples;
    std::vector<std::pair<std::string, std::string>> data;
    double seconds = 0.0;

    bool passed() const { return status == "pass"; }

    void fail(std::string counterexample) {
        status = "fail";
        counterexamples.push_back(std::move(counterexample));
    }
    void put(std::string key, std::string value) {
        data.emplace_back(std::move(key), std::move(value));
    }
    void bound(std::string key, long long value) {
        bounds.emplace_back(std::move(key), std::to_string(value));
    }
};

struct RunReport {
    int schema = 1;
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    bool any_overflow() const {
        for (const auto& c : checks)
            if (c.overflow || c.status == "refused") return true;
        return false;
    }
};

enum class ReportFormat { Text, Json, Tsv };

// Deterministic serialization; identical reports produce identical bytes.
// Timing fields are included only when with_timing is set.
std::string serialize_report(const RunReport& report, ReportFormat format, bool with_timing);

} // namespace freefusion
