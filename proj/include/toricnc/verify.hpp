#pragma once

#include <string>
#include <vector>

#include "toricnc/toric.hpp"

namespace toricnc {

struct CheckFailure {
    std::string check;
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one verification suite. The exit status of the CLI is derived
/// from `failures` alone; `wall_ms` is informational.
struct VerificationReport {
    std::string suite;
    long long checks = 0;
    std::vector<CheckFailure> failures;
    long long wall_ms = 0;
};

struct VerifyOptions {
    int max_d = 6;
    /// Cap for sweeps that enumerate NC(d).
    int guard_nc = kNcRouteGuard;
    /// Cap for sweeps over all interval families (times NC(d) inside).
    int guard_family = 8;
};

/// tables, involution, beta, weights, q-model, c-model, duality,
/// dehn-sommerville, little, all.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" concatenates every suite in declaration order.
/// Unknown names throw std::invalid_argument.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace toricnc
