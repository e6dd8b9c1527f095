#pragma once

#include <string>

#include "qconvex/qspecial.hpp"
#include "qconvex/series.hpp"

namespace qconvex {

// |a_n| <= [n + n(n-1)(1+q)/2] / (1 + q + ... + q^{n-1}) for the q-analog
// close-to-convex class. n >= 2; the geometric-sum denominator makes q = 1
// return exactly n.
double kq_bound(int n, QParam q);

// Reference-specific refinements. Accepted references: identity and the
// four 1-z-form catalog entries (cayley_plus, koebe_plus, lemniscate_plus,
// hexic_plus); anything else throws. n >= 2.
double kq_bound_for_reference(int n, QParam q, CatalogId ref);

// |a_n| <= (1+q)/(q [n-1]) * prod_{k=2}^{n-1} (1 + (1+q)/(q [k-1])) for the
// q-analog starlike class, with [j] = 1 + q + ... + q^{j-1} (the stable
// form of (1-q^2)/(q - q^k)). n >= 2, 0 < q < 1.
double sq_product_bound(int n, QParam q);

// c_n from the extremal-function recurrence; |a_n| <= c_n on the q-analog
// starlike class. n >= 1, 1e-6 <= q < 1.
double sq_cn_bound(int n, QParam q);

struct IdentityReport {
    double max_deviation = 0.0;  // worst coefficientwise |left - right|, n <= N
    int worst_index = 0;
    int first_mismatch = -1;     // first n with deviation > 1e-9, or -1
};

// Coefficient identity between the close-to-convex bound series
// z + sum_n [n + n(n-1)(1+q)/2] (1-q)/(1-q^n) z^n and
// (1+q)/2 z^2 Psi'' + z Psi', both built as TruncatedSeries. 0 < q < 1.
IdentityReport verify_series1_identity(QParam q, int order);

// Three closed forms proposed for the identity- and cayley-reference bound
// series. phi_form and psi_derivative_form hold to roundoff;
// phi_squared_form disagrees from n = 4 on and is reported as found.
struct CorollaryReport {
    IdentityReport phi_form;            // vs (1+q) z phi(q,q;q^2;q,z) - qz
    IdentityReport phi_squared_form;    // vs z + z^2 phi(q^2,q^2;q^3;q^2,z)
    IdentityReport psi_derivative_form; // vs (1+q) z Psi' - q Psi
};

CorollaryReport verify_identity_corollaries(QParam q, int order);

// Ratio-test radius: mean of A_i / A_{i+1} over the last 20 consecutive
// pairs. Requires at least 21 trailing entries, all strictly positive.
double radius_estimate(const std::vector<double>& a);

enum class BoundClass {
    kq_general,
    kq_identity,
    kq_cayley,
    kq_koebe,
    kq_lemniscate,
    kq_hexic,
    sq_product,
    sq_cn,
};

const char* bound_class_tag(BoundClass c);
std::optional<BoundClass> parse_bound_class(std::string_view tag);

// Bound values over an index range next to the same formula evaluated at
// q = 1 - eps (the classical column). n = 1 rows are exactly 1; the range
// is clamped below at 1.
struct BoundTable {
    BoundClass class_tag;
    double q;
    int n_lo, n_hi;
    double eps;  // classical column offset, default 1e-6
    std::vector<double> values;
    std::vector<double> classical_limit;
};

BoundTable make_bound_table(BoundClass c, QParam q, int n_lo, int n_hi, double eps = 1e-6);

// CSV with header "n,value,classical_limit", six decimal places.
std::string bound_table_csv(const BoundTable& t);

}  // namespace qconvex
