#pragma once

#include "mckayq/catalog.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mckayq {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/* Structural laws on a finished report: t*a*b = [l:k], Res-Ind, valuation integrality,
 * nu bijective and trivial exactly when Gorenstein, alternating rank sums. */
std::vector<CheckResult> property_checks(Report const& r);

/* Dixon tables agree with dual-group tables on C_m (m <= max_m) and C2 x C4. */
std::vector<CheckResult> abelian_oracle_checks(int max_m = 16);

/* Corrupts one a_i and confirms the G-module decomposition raises NonDivisible. */
CheckResult corrupted_multiplicity_check(Report const& r);

struct SelftestOptions {
    std::vector<std::string> entries;  // empty with subset = true runs nothing
    bool subset = false;
    bool properties = true;
    bool oracle = true;
    std::function<void(CheckResult const&)> on_result;
};

struct SelftestSummary {
    std::vector<CheckResult> results;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

SelftestSummary selftest(SelftestOptions const& opt);

}  // namespace mckayq
