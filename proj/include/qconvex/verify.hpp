#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qconvex/series.hpp"

namespace qconvex {

// One entry of the self-verification suite. status is "pass", "fail", or
// "expected-mismatch" (a documented discrepancy that is reported, not
// counted as failure).
struct CheckOutcome {
    std::string name;
    std::string status;
    nlohmann::json detail;
};

// Runs every cross-check the library can perform on itself at the given
// deformation parameter and truncation order: recurrence versus exp-series
// coefficients, hypergeometric closed forms, classical bound limits,
// criterion/membership consistency on a built-in corpus, equivalence of
// the two close-to-convex verifiers, negative controls, and the radius
// estimate. Requires q < 1.
std::vector<CheckOutcome> run_verification_suite(QParam q, int order);

// True when no outcome has status "fail".
bool suite_passed(const std::vector<CheckOutcome>& outcomes);

}  // namespace qconvex
