#pragma once

#include "ga/rootsystem.hpp"

#include <string>
#include <vector>

namespace ga {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const;
};

struct VerifyOptions {
    int threads = 1;
    GoldenQuaternion functional = default_root_functional();
};

/// The full verification suite: every acceptance criterion that can run in
/// process (group orders through the orbit decomposition table), plus the
/// library-level invariant checks.  Deterministic: the result list and all
/// detail strings are identical for any thread count.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

}  // namespace ga
