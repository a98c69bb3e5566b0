#pragma once

#include <string>
#include <vector>

namespace hcrep {

/// One checked clause of a criterion; witnesses explain failures (or, for
/// informative clauses, the values that were checked).
struct Check {
    Check() = default;
    Check(std::string n, bool ok = true) : name(std::move(n)), passed(ok) {}

    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;
};

/// Structured yes/no answer. `preconditions` lists violated input
/// requirements; a verdict with violated preconditions never holds.
struct Verdict {
    bool holds = true;
    std::vector<Check> checks;
    std::vector<std::string> preconditions;
    std::vector<std::string> notes;

    void add(Check c) {
        holds = holds && c.passed;
        checks.push_back(std::move(c));
    }
    void violate(std::string what) {
        holds = false;
        preconditions.push_back(std::move(what));
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace hcrep
