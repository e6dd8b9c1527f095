#include "qconvex/criteria.hpp"

#include <cmath>

namespace qconvex {

namespace {

constexpr double kChainTol = 1e-12;   // theorems use non-strict inequalities
constexpr double kBudgetTol = 1e-12;

void require_normalized(const std::vector<double>& a) {
    if (a.size() < 2 || a[0] != 0.0 || a[1] != 1.0)
        throw std::invalid_argument(
            "criteria: coefficient sequence must be normalized (A0 = 0, A1 = 1)");
}

// One |.|-term of a truncated criterion sum, tagged with the index it is
// attributed to when the running sum first exceeds the budget.
struct Term {
    int index;
    double value;
};

CriterionResult scan_sum(const std::vector<Term>& terms, double budget, CatalogId certifies) {
    CriterionResult r;
    r.budget = budget;
    r.certifies = certifies;
    for (const Term& t : terms) {
        const double inc = std::abs(t.value);
        r.statistic += inc;
        r.last_increment = inc;
        if (!r.first_violation && r.statistic > budget + kBudgetTol)
            r.first_violation = t.index;
    }
    r.satisfied = !r.first_violation.has_value();
    const size_t n = terms.size();
    const size_t look = std::min<size_t>(8, n);
    for (size_t i = n - look; i < n; ++i)
        if (std::abs(terms[i].value) >= 1e-10 * budget) {
            r.converged = false;
            break;
        }
    return r;
}

// Two-branch monotone chain. The decreasing branch requires
//   first <= head_hi, nonincreasing, every value >= floor;
// the increasing branch requires
//   first >= head_lo, nondecreasing, every value <= ceil.
// The statistic is the extreme |value|, with the surviving branch's bound
// as the budget (falling back to the branch that lived longest).
struct ChainSpec {
    double head_hi, floor_val;  // decreasing branch
    double head_lo, ceil_val;   // increasing branch
};

CriterionResult scan_chain(const std::vector<Term>& vals, const ChainSpec& cs,
                           CatalogId certifies) {
    CriterionResult r;
    r.certifies = certifies;
    if (vals.empty()) {  // nothing to constrain at this truncation order
        r.satisfied = true;
        r.budget = std::max(std::abs(cs.head_hi), std::abs(cs.floor_val));
        return r;
    }

    auto scan = [&](bool decreasing) -> std::optional<int> {
        double prev = 0.0;
        for (size_t i = 0; i < vals.size(); ++i) {
            const double v = vals[i].value;
            if (decreasing) {
                if (i == 0 && v > cs.head_hi + kChainTol) return vals[i].index;
                if (i > 0 && v > prev + kChainTol) return vals[i].index;
                if (v < cs.floor_val - kChainTol) return vals[i].index;
            } else {
                if (i == 0 && v < cs.head_lo - kChainTol) return vals[i].index;
                if (i > 0 && v < prev - kChainTol) return vals[i].index;
                if (v > cs.ceil_val + kChainTol) return vals[i].index;
            }
            prev = v;
        }
        return std::nullopt;
    };

    const std::optional<int> dec_fail = scan(true);
    const std::optional<int> inc_fail = scan(false);

    double extreme = 0.0;
    for (const Term& t : vals) extreme = std::max(extreme, std::abs(t.value));
    r.statistic = extreme;

    const double dec_budget = std::max(std::abs(cs.head_hi), std::abs(cs.floor_val));
    const double inc_budget = std::max(std::abs(cs.head_lo), std::abs(cs.ceil_val));
    if (!dec_fail) {
        r.satisfied = true;
        r.budget = dec_budget;
    } else if (!inc_fail) {
        r.satisfied = true;
        r.budget = inc_budget;
    } else {
        r.satisfied = false;
        // report the branch that survived deeper into the sequence
        if (*dec_fail >= *inc_fail) {
            r.budget = dec_budget;
            r.first_violation = dec_fail;
        } else {
            r.budget = inc_budget;
            r.first_violation = inc_fail;
        }
    }
    return r;
}

const ChainSpec kUnitChain{1.0, 0.0, 1.0, 2.0};    // [0,1] down or [1,2] up
const ChainSpec kHexicChain{0.0, -1.0, 0.0, 1.0};  // [-1,0] down or [0,1] up

}  // namespace

std::vector<double> criterion_sequence(const std::vector<double>& a, QParam q, Rule rule) {
    require_normalized(a);
    const int n_max = static_cast<int>(a.size()) - 1;
    std::vector<double> bracket(a.size(), 0.0);  // bracket[n] = 1 + q + ... + q^{n-1}
    {
        double s = 0.0, p = 1.0;
        for (int n = 1; n <= n_max; ++n) {
            s += p;
            p *= q.value;
            bracket[static_cast<size_t>(n)] = s;
        }
    }
    if (rule == Rule::plain) {
        std::vector<double> b(a.size(), 0.0);
        for (int n = 1; n <= n_max; ++n)
            b[static_cast<size_t>(n)] = a[static_cast<size_t>(n)] * bracket[static_cast<size_t>(n)];
        return b;
    }
    std::vector<double> b(a.size() - 1, 0.0);
    for (int n = 0; n < n_max; ++n)
        b[static_cast<size_t>(n)] = a[static_cast<size_t>(n) + 1] * bracket[static_cast<size_t>(n) + 1] -
                                    a[static_cast<size_t>(n)] * bracket[static_cast<size_t>(n)];
    return b;
}

CriterionResult crit_sum_halfplane(const std::vector<double>& a, QParam q) {
    const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
    const int n_max = static_cast<int>(b.size()) - 1;
    std::vector<Term> terms;
    for (int n = 1; n + 1 <= n_max; ++n)
        terms.push_back({n + 1, b[static_cast<size_t>(n) + 1] - b[static_cast<size_t>(n)]});
    return scan_sum(terms, 1.0, CatalogId::cayley_plus);
}

CriterionResult crit_monotone_halfplane(const std::vector<double>& a, QParam q) {
    const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
    const int n_max = static_cast<int>(b.size()) - 1;
    std::vector<Term> vals;
    for (int n = 2; n <= n_max; ++n) vals.push_back({n, b[static_cast<size_t>(n)]});
    return scan_chain(vals, kUnitChain, CatalogId::cayley_plus);
}

CriterionResult crit_koebe(const std::vector<double>& a, QParam q, CritVariant variant) {
    const std::vector<double> b = criterion_sequence(a, q, Rule::consecutive_diff);
    const int n_max = static_cast<int>(b.size()) - 1;
    if (variant == CritVariant::sum) {
        std::vector<Term> terms;
        for (int n = 1; n <= n_max; ++n)
            terms.push_back({n, b[static_cast<size_t>(n)] - b[static_cast<size_t>(n) - 1]});
        return scan_sum(terms, 1.0, CatalogId::koebe_plus);
    }
    std::vector<Term> vals;
    for (int n = 1; n <= n_max; ++n) vals.push_back({n, b[static_cast<size_t>(n)]});
    return scan_chain(vals, kUnitChain, CatalogId::koebe_plus);
}

CriterionResult crit_odd_lemniscate(const std::vector<double>& a, QParam q, CritVariant variant) {
    require_normalized(a);
    for (size_t n = 2; n < a.size(); n += 2)
        if (std::abs(a[n]) > 1e-14)
            throw std::invalid_argument("crit_odd_lemniscate: even-index coefficients must vanish");
    const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
    const int n_max = static_cast<int>(b.size()) - 1;
    if (variant == CritVariant::sum) {
        std::vector<Term> terms;
        for (int m = 1; 2 * m + 1 <= n_max; ++m)
            terms.push_back({2 * m + 1,
                             b[static_cast<size_t>(2 * m - 1)] - b[static_cast<size_t>(2 * m + 1)]});
        return scan_sum(terms, 1.0, CatalogId::lemniscate_plus);
    }
    std::vector<Term> vals;
    for (int m = 1; 2 * m + 1 <= n_max; ++m)
        vals.push_back({2 * m + 1, b[static_cast<size_t>(2 * m + 1)]});
    return scan_chain(vals, kUnitChain, CatalogId::lemniscate_plus);
}

CriterionResult crit_two_step(const std::vector<double>& a, QParam q, CritVariant variant) {
    const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
    const int n_max = static_cast<int>(b.size()) - 1;
    if (variant == CritVariant::sum) {
        std::vector<Term> terms;
        for (int n = 2; n <= n_max; ++n)
            terms.push_back({n, b[static_cast<size_t>(n)] - b[static_cast<size_t>(n) - 2]});
        return scan_sum(terms, 1.0, CatalogId::lemniscate_plus);
    }
    std::vector<Term> vals;
    for (int n = 2; n <= n_max; ++n)
        vals.push_back({n, b[static_cast<size_t>(n) - 1] + b[static_cast<size_t>(n)]});
    return scan_chain(vals, kUnitChain, CatalogId::lemniscate_plus);
}

CriterionResult crit_hexic(const std::vector<double>& a, QParam q, CritVariant variant) {
    const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
    const int n_max = static_cast<int>(b.size()) - 1;
    if (variant == CritVariant::sum) {
        std::vector<Term> terms;
        for (int n = 1; n + 1 <= n_max; ++n)
            terms.push_back({n, b[static_cast<size_t>(n) - 1] - b[static_cast<size_t>(n)] +
                                    b[static_cast<size_t>(n) + 1]});
        return scan_sum(terms, 1.0, CatalogId::hexic_plus);
    }
    std::vector<Term> vals;
    if (n_max >= 2) {
        vals.push_back({1, b[2] - b[1]});
        double prefix = 0.0;  // B_2 + ... + B_{n-1}, empty at n = 2
        for (int n = 2; n + 1 <= n_max; ++n) {
            if (n >= 3) prefix += b[static_cast<size_t>(n) - 1];
            vals.push_back({n, prefix + b[static_cast<size_t>(n) + 1]});
        }
    }
    return scan_chain(vals, kHexicChain, CatalogId::hexic_plus);
}

}  // namespace qconvex
