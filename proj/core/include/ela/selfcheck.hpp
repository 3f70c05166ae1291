#pragma once

// The acceptance suite: every check runs at its pinned tolerance and reports
// one pass/fail line. The CLI selfcheck command and the acceptance test
// binary both drive this runner.

#include <cstdint>
#include <string>
#include <vector>

namespace ela {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SelfcheckConfig {
    std::uint64_t seed = 20240801;
    /// Name of a check whose inputs are deliberately corrupted (test hook for
    /// the failure path); empty in normal operation. Supported: "i_from_j".
    std::string inject_fault;
};

/// Runs all acceptance checks. Check names:
///   rotation_invariance, i_from_j, j_from_i, basis_det_formula,
///   separation_soundness, separation_sensitivity, gram_reconstruction,
///   cartan_correspondence, scale_chain, jacobian_rank_18, homogeneity,
///   round_trip
std::vector<CheckResult> run_selfcheck(const SelfcheckConfig& config = {});

}  // namespace ela
