#pragma once

// Seeded invariant suites over random pointwise data, shared by the
// `verify-algebra` command and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace spinsq {

struct CheckResult {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Clifford, forms and squaring invariants over `samples` random inputs.
std::vector<CheckResult> run_algebra_suite(std::uint64_t seed, int samples = 1000);

} // namespace spinsq
