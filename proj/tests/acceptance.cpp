// Acceptance suite runner: one pass/fail line per check, nonzero exit on any
// failure. The same checks back the CLI's selfcheck subcommand.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ela/selfcheck.hpp"

int main(int argc, char** argv) {
    ela::SelfcheckConfig cfg;
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) cfg.seed = std::strtoull(argv[i] + 7, nullptr, 10);
    }
    const auto results = ela::run_selfcheck(cfg);
    bool all = true;
    double total = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-24s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all = all && r.passed;
        total += r.seconds;
    }
    std::printf("%s (%zu checks, %.1fs)\n", all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL",
                results.size(), total);
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
