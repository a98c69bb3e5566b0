#include <cstdio>
#include <cstdlib>
#include <string>

#include "hcrep/verify/verify.hpp"

// Runs every acceptance criterion in the full profile and prints one line per
// criterion. Exit status is nonzero if any criterion fails or overruns its
// time budget.
int main(int argc, char** argv) {
    hcrep::verify::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick") opts.profile = hcrep::verify::Profile::quick;
        else if (a == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::fprintf(stderr, "usage: acceptance [--quick] [--seed N]\n");
            return 2;
        }
    }
    int failed = 0;
    for (int id = 1; id <= hcrep::verify::kCriterionCount; ++id) {
        auto r = hcrep::verify::run_criterion(id, opts);
        const bool in_budget = r.seconds <= r.budget_seconds;
        const bool ok = r.passed && in_budget;
        failed += !ok;
        std::printf("criterion %2d %-4s %-58s %8.3fs / %gs%s\n", id, ok ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.budget_seconds, in_budget ? "" : " (over budget)");
        if (!r.passed) std::printf("  details: %s\n", r.details.dump().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", hcrep::verify::kCriterionCount - failed, hcrep::verify::kCriterionCount);
    return failed ? 1 : 0;
}
