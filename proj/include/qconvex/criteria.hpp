#pragma once

#include <optional>

#include "qconvex/qspecial.hpp"
#include "qconvex/series.hpp"

namespace qconvex {

// B-sequence construction from a real coefficient sequence A_0..A_N.
//   plain:            B_n = A_n (1 + q + ... + q^{n-1}),  B_0 = 0
//   consecutive_diff: B_n = A_{n+1}[n+1] - A_n[n],        B_0 = 1
// where [n] is the geometric sum. At q = 1 these are exactly n A_n and
// (n+1) A_{n+1} - n A_n. The consecutive_diff sequence stops at index N-1.
enum class Rule { plain, consecutive_diff };

std::vector<double> criterion_sequence(const std::vector<double>& a, QParam q, Rule rule);

// Every sufficient condition comes in a summability form (partial sums of
// a fixed |.| combination stay within budget) and, where stated, a
// monotone-chain form.
enum class CritVariant { sum, chain };

struct CriterionResult {
    bool satisfied = false;
    double statistic = 0.0;  // partial sum, or extreme |chain value|
    double budget = 0.0;
    std::optional<int> first_violation;
    CatalogId certifies = CatalogId::identity;
    // Informational: whether the trailing 8 summands were each below
    // 1e-10 * budget (a truncated sum that is still moving is reported,
    // not failed), and the magnitude of the final summand.
    bool converged = true;
    double last_increment = 0.0;
};

// sum_{n>=1} |B_{n+1} - B_n| <= 1 with the plain rule; certifies z/(1-z).
CriterionResult crit_sum_halfplane(const std::vector<double>& a, QParam q);

// 1 >= B_2 >= B_3 >= ... >= 0 or 1 <= B_2 <= ... <= 2; certifies z/(1-z).
CriterionResult crit_monotone_halfplane(const std::vector<double>& a, QParam q);

// consecutive_diff rule. sum: sum |B_n - B_{n-1}| <= 1;
// chain: 1 >= B_1 >= ... >= 0 or 1 <= B_1 <= ... <= 2. Certifies z/(1-z)^2.
CriterionResult crit_koebe(const std::vector<double>& a, QParam q,
                           CritVariant variant = CritVariant::sum);

// Odd functions (even coefficients must vanish). sum over consecutive odd
// indices |B_{2n-1} - B_{2n+1}| <= 1; chain on B_3 >= B_5 >= ... Certifies
// z/(1-z^2).
CriterionResult crit_odd_lemniscate(const std::vector<double>& a, QParam q,
                                    CritVariant variant = CritVariant::sum);

// sum: sum_{n>=2} |B_n - B_{n-2}| <= 1; chain on the pair sums
// B_{n-1} + B_n. Certifies z/(1-z^2).
CriterionResult crit_two_step(const std::vector<double>& a, QParam q,
                              CritVariant variant = CritVariant::sum);

// sum: sum_{n>=1} |B_{n-1} - B_n + B_{n+1}| <= 1; chain on
// T_1 = B_2 - B_1, T_n = B_2 + ... + B_{n-1} + B_{n+1}, either
// 0 >= T_1 >= T_2 >= ... >= -1 or 0 <= T_1 <= ... <= 1. Certifies
// z/(1-z+z^2).
CriterionResult crit_hexic(const std::vector<double>& a, QParam q,
                           CritVariant variant = CritVariant::sum);

}  // namespace qconvex
