#pragma once

// Cross-method verification suites driven by the CLI `verify` command.

#include <string>
#include <vector>

#include "tqft/polylab.hpp"
#include "tqft/recursion.hpp"

namespace tqft {

enum class Suite { all, census, fusion, poly, hopf };

Suite parse_suite(const std::string& name);

struct VerifyOptions {
    std::vector<int> primes{5, 7, 11, 13};
    int gmax = 4;
    /// The census is skipped for trees whose search space exceeds this.
    double census_budget = 1e9;
};

/// Every check in the suite, in a deterministic order.
std::vector<ClaimCheck> run_suite(Suite suite, const VerifyOptions& options, DimTableCache& cache);

/// Informational lines for the delta polynomial pattern scan, g = 2..gmax.
std::vector<std::string> conjecture_report(int gmax, DimTableCache& cache);

}  // namespace tqft
