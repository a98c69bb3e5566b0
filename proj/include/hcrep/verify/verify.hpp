#pragma once

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include <json.hpp>

namespace hcrep::verify {

enum class Profile { quick, full };

/// "quick" or "full"; throws InvalidInput otherwise.
Profile parse_profile(const std::string& s);
std::string to_string(Profile p);

struct VerifyOptions {
    Profile profile = Profile::full;
    std::uint64_t seed = 42;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct CriterionResult {
    CriterionResult() = default;
    CriterionResult(int i, std::string n) : id(i), name(std::move(n)) {}

    int id = 0;
    std::string name;
    bool passed = false;
    /// Deterministic given the options (no timing inside).
    nlohmann::json details;
    double seconds = 0;
    double budget_seconds = 0;
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1-based id).
CriterionResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionResult> run_all(const VerifyOptions& opts);

/// The deterministic part of a run: profile, seed, and per-criterion outcome
/// and details.
nlohmann::json results_payload(const VerifyOptions& opts, const std::vector<CriterionResult>& results);
/// Per-criterion seconds and budgets.
nlohmann::json timing_payload(const std::vector<CriterionResult>& results);

}  // namespace hcrep::verify
