#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace graycat {

// Thrown when a verification sweep would exceed the configured tuple budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One verification record: an identity or axiom that was checked.
struct CheckRecord {
    std::string id;           // stable identifier, e.g. "axiom-2cm1"
    std::string description;  // human-readable statement
    std::string mode = "exhaustive";  // "exhaustive" or "sampled(seed=...)"
    bool pass = false;
    bool informational = false;  // findings that do not affect overall status
    std::string witness;      // first counterexample (empty if pass)
};

struct StageReport {
    std::string stage;  // "axioms", "gray", "algebra", "chain", "representation"
    std::vector<CheckRecord> checks;
    std::vector<std::pair<std::string, long long>> dimensions;  // name -> value
    bool skipped = false;
    std::string skip_reason;

    bool passed() const {
        if (skipped) return false;
        for (const auto& c : checks)
            if (!c.pass && !c.informational) return false;
        return true;
    }
    void add(CheckRecord c) { checks.push_back(std::move(c)); }
    void dim(const std::string& name, long long v) { dimensions.emplace_back(name, v); }
};

struct VerificationReport {
    std::string fixture;
    bool expected_pass = true;
    std::vector<StageReport> stages;

    bool passed() const {
        for (const auto& s : stages)
            if (!s.skipped && !s.passed()) return false;
        for (const auto& s : stages)
            if (s.skipped) return false;
        return true;
    }
    const CheckRecord* first_failure() const {
        for (const auto& s : stages)
            for (const auto& c : s.checks)
                if (!c.pass && !c.informational) return &c;
        return nullptr;
    }
};

}  // namespace graycat
