#pragma once

#include <string>
#include <vector>

namespace grpdfrob {

struct CheckResult {
    std::string name;     // stable check identifier, e.g. "product associative"
    bool pass = false;
    std::string witness;  // first failing tuple in canonical order; empty on pass
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    void add(std::string name, bool pass, std::string witness = {}) {
        checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
    }

    void merge(const AxiomReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

// Entry-by-entry comparison result for the round-trip operations.
struct Mismatch {
    std::string component;  // "carrier", "grading", "product", "eta", "phi", "unit", ...
    std::string key;        // which entry
    std::string lhs;
    std::string rhs;
};

struct EqualityReport {
    std::vector<Mismatch> mismatches;
    bool equal() const { return mismatches.empty(); }
    void add(std::string component, std::string key, std::string lhs, std::string rhs) {
        mismatches.push_back({std::move(component), std::move(key), std::move(lhs), std::move(rhs)});
    }
};

}  // namespace grpdfrob
