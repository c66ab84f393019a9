#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stretchfpp/kernels.hpp"

namespace sfpp {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationConfig {
    int trials = 1000;  // ladders per family for the recursion check
    int max_n = 50;
    int subadditivity_trials = 500;
    std::uint64_t seed = 1;
    KernelFn kernel = kernel_k;  // swapped out by tests to prove the checks bite
};

// Recursion vs Dijkstra for the six non-trivial families, subadditivity,
// kernel normalization / symmetry / derivative reconstruction, ODE and
// integral-equation residuals of the stationary density, Bessel recurrence.
std::vector<CheckResult> run_validation(const ValidationConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

// "PASS name detail" / "FAIL name detail", one line each.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace sfpp
