#include "qconvex/bounds.hpp"

#include <cmath>
#include <cstdio>

namespace qconvex {

namespace {

void require_subunit(QParam q, const char* who) {
    if (q.value >= 1.0)
        throw std::domain_error(std::string(who) + ": requires q < 1");
}

// z^k * f, extending the truncation order by k.
TruncatedSeries shift_up(const TruncatedSeries& f, int k) {
    std::vector<Complex> c(static_cast<size_t>(f.order() + k) + 1);
    for (int n = 0; n <= f.order(); ++n) c[static_cast<size_t>(n + k)] = f[n];
    return TruncatedSeries(std::move(c));
}

IdentityReport compare(const TruncatedSeries& left, const TruncatedSeries& right) {
    IdentityReport rep;
    const int n = std::min(left.order(), right.order());
    for (int k = 0; k <= n; ++k) {
        const double dev = std::abs(left[k] - right[k]);
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_index = k;
        }
        if (rep.first_mismatch < 0 && dev > 1e-9) rep.first_mismatch = k;
    }
    return rep;
}

}  // namespace

double kq_bound(int n, QParam q) {
    if (n < 2) throw std::invalid_argument("kq_bound: n must be at least 2");
    const double num = n + n * static_cast<double>(n - 1) * (1.0 + q.value) / 2.0;
    return num / q_bracket(q, n);
}

double kq_bound_for_reference(int n, QParam q, CatalogId ref) {
    if (n < 2) throw std::invalid_argument("kq_bound_for_reference: n must be at least 2");
    const double s = q_bracket(q, n);
    const double qq = q.value;
    switch (ref) {
        case CatalogId::identity:
            return (1.0 + qq) / s;
        case CatalogId::cayley_plus:
            return (n + qq * (n - 1)) / s;
        case CatalogId::koebe_plus:
            return kq_bound(n, q);
        case CatalogId::lemniscate_plus:
            // parity split: exactly one branch per n
            if (n % 2 == 1) return (n / 2.0 * (1.0 + qq) + (1.0 - qq) / 2.0) / s;
            return (1.0 + qq) * (n / 2.0) / s;
        case CatalogId::hexic_plus:
            // residue split mod 3: n = 3m-1, 3m, 3m+1
            switch (n % 3) {
                case 2: return ((2.0 - qq) / 3.0 + 2.0 * n / 3.0 * (1.0 + qq)) / s;
                case 0: return (1.0 + qq) * (2.0 * n / 3.0) / s;
                default: return (2.0 * n / 3.0 * (1.0 + qq) + (1.0 - 2.0 * qq) / 3.0) / s;
            }
        default:
            throw std::invalid_argument("kq_bound_for_reference: unsupported reference");
    }
}

double sq_product_bound(int n, QParam q) {
    if (n < 2) throw std::invalid_argument("sq_product_bound: n must be at least 2");
    require_subunit(q, "sq_product_bound");
    const double c = (1.0 + q.value) / q.value;
    double bracket = 1.0, p = q.value;  // [k-1] for k = 2, then grown in step
    double prod = 1.0;
    for (int k = 2; k <= n - 1; ++k) {
        prod *= 1.0 + c / bracket;
        bracket += p;
        p *= q.value;
    }
    return c / bracket * prod;  // bracket now holds [n-1]
}

double sq_cn_bound(int n, QParam q) {
    if (n < 1) throw std::invalid_argument("sq_cn_bound: n must be at least 1");
    return kq_coeffs_recurrence(q, n)[static_cast<size_t>(n)];
}

IdentityReport verify_series1_identity(QParam q, int order) {
    require_subunit(q, "verify_series1_identity");
    std::vector<Complex> left(static_cast<size_t>(order) + 1);
    {
        double bracket = 0.0, p = 1.0;
        for (int n = 1; n <= order; ++n) {
            bracket += p;
            p *= q.value;
            left[static_cast<size_t>(n)] =
                (n + n * static_cast<double>(n - 1) * (1.0 + q.value) / 2.0) / bracket;
        }
    }
    const TruncatedSeries psi = psi_series(q, order);
    const TruncatedSeries d1 = q_difference(psi, QParam(1.0));
    const TruncatedSeries d2 = q_difference(d1, QParam(1.0));
    const TruncatedSeries right =
        add(shift_up(d1, 1), scale(shift_up(d2, 2), (1.0 + q.value) / 2.0));
    return compare(TruncatedSeries(std::move(left)), right);
}

CorollaryReport verify_identity_corollaries(QParam q, int order) {
    require_subunit(q, "verify_identity_corollaries");
    const double qq = q.value;
    if (order < 2)
        throw std::invalid_argument("verify_identity_corollaries: order must be at least 2");

    // bound series for the identity reference: z + sum (1+q)/[n] z^n
    std::vector<Complex> ident(static_cast<size_t>(order) + 1);
    // bound series for the cayley reference: z + sum (n + q(n-1))/[n] z^n
    std::vector<Complex> cayley(static_cast<size_t>(order) + 1);
    ident[1] = 1.0;
    cayley[1] = 1.0;
    {
        double bracket = 1.0, p = qq;
        for (int n = 2; n <= order; ++n) {
            bracket += p;
            p *= qq;
            ident[static_cast<size_t>(n)] = (1.0 + qq) / bracket;
            cayley[static_cast<size_t>(n)] = (n + qq * (n - 1)) / bracket;
        }
    }
    const TruncatedSeries ident_series{std::move(ident)};
    const TruncatedSeries cayley_series{std::move(cayley)};

    CorollaryReport rep;
    {
        // (1+q) z phi(q,q;q^2;q,z) - qz
        const TruncatedSeries phi = heine_phi({qq, qq, qq * qq, qq, order - 1});
        TruncatedSeries rhs = scale(shift_up(phi, 1), 1.0 + qq);
        std::vector<Complex> minus_qz(static_cast<size_t>(order) + 1);
        minus_qz[1] = -qq;
        rhs = add(rhs, TruncatedSeries(std::move(minus_qz)));
        rep.phi_form = compare(ident_series, rhs);
    }
    {
        // z + z^2 phi(q^2,q^2;q^3;q^2,z)
        const TruncatedSeries phi2 =
            heine_phi({qq * qq, qq * qq, qq * qq * qq, qq * qq, order - 2});
        TruncatedSeries rhs = shift_up(phi2, 2);
        std::vector<Complex> just_z(static_cast<size_t>(order) + 1);
        just_z[1] = 1.0;
        rhs = add(rhs, TruncatedSeries(std::move(just_z)));
        rep.phi_squared_form = compare(ident_series, rhs);
    }
    {
        // (1+q) z Psi' - q Psi
        const TruncatedSeries psi = psi_series(q, order);
        const TruncatedSeries d1 = q_difference(psi, QParam(1.0));
        const TruncatedSeries rhs = add(scale(shift_up(d1, 1), 1.0 + qq), scale(psi, -qq));
        rep.psi_derivative_form = compare(cayley_series, rhs);
    }
    return rep;
}

double radius_estimate(const std::vector<double>& a) {
    constexpr size_t kWindow = 20;
    if (a.size() < kWindow + 1)
        throw std::invalid_argument("radius_estimate: need at least 21 entries");
    double sum = 0.0;
    for (size_t i = a.size() - kWindow - 1; i + 1 < a.size(); ++i) {
        if (!(a[i] > 0.0) || !(a[i + 1] > 0.0))
            throw std::invalid_argument("radius_estimate: vanishing term in the averaging window");
        sum += a[i] / a[i + 1];
    }
    return sum / kWindow;
}

const char* bound_class_tag(BoundClass c) {
    switch (c) {
        case BoundClass::kq_general: return "kq_general";
        case BoundClass::kq_identity: return "kq_identity";
        case BoundClass::kq_cayley: return "kq_cayley";
        case BoundClass::kq_koebe: return "kq_koebe";
        case BoundClass::kq_lemniscate: return "kq_lemniscate";
        case BoundClass::kq_hexic: return "kq_hexic";
        case BoundClass::sq_product: return "sq_product";
        case BoundClass::sq_cn: return "sq_cn";
    }
    throw std::invalid_argument("bound_class_tag: unknown class");
}

std::optional<BoundClass> parse_bound_class(std::string_view tag) {
    for (BoundClass c : {BoundClass::kq_general, BoundClass::kq_identity, BoundClass::kq_cayley,
                         BoundClass::kq_koebe, BoundClass::kq_lemniscate, BoundClass::kq_hexic,
                         BoundClass::sq_product, BoundClass::sq_cn})
        if (tag == bound_class_tag(c)) return c;
    return std::nullopt;
}

namespace {

double bound_value(BoundClass c, int n, QParam q) {
    if (n == 1) return 1.0;  // normalization row
    switch (c) {
        case BoundClass::kq_general: return kq_bound(n, q);
        case BoundClass::kq_identity: return kq_bound_for_reference(n, q, CatalogId::identity);
        case BoundClass::kq_cayley: return kq_bound_for_reference(n, q, CatalogId::cayley_plus);
        case BoundClass::kq_koebe: return kq_bound_for_reference(n, q, CatalogId::koebe_plus);
        case BoundClass::kq_lemniscate:
            return kq_bound_for_reference(n, q, CatalogId::lemniscate_plus);
        case BoundClass::kq_hexic: return kq_bound_for_reference(n, q, CatalogId::hexic_plus);
        case BoundClass::sq_product: return sq_product_bound(n, q);
        case BoundClass::sq_cn: return sq_cn_bound(n, q);
    }
    throw std::invalid_argument("bound_value: unknown class");
}

}  // namespace

BoundTable make_bound_table(BoundClass c, QParam q, int n_lo, int n_hi, double eps) {
    if (n_lo > n_hi) throw std::invalid_argument("make_bound_table: empty index range");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("make_bound_table: eps must lie in (0, 1)");
    n_lo = std::max(n_lo, 1);
    BoundTable t{c, q.value, n_lo, n_hi, eps, {}, {}};
    const QParam near_one(1.0 - eps);

    // The recurrence class is cheaper computed once for the whole range.
    std::vector<double> cn, cn_cl;
    if (c == BoundClass::sq_cn) {
        cn = kq_coeffs_recurrence(q, n_hi);
        cn_cl = kq_coeffs_recurrence(near_one, n_hi);
    }
    auto value_at = [&](int n, QParam qq, const std::vector<double>& cache) {
        if (c == BoundClass::sq_cn && n >= 1) return cache[static_cast<size_t>(n)];
        return bound_value(c, n, qq);
    };

    for (int n = n_lo; n <= n_hi; ++n) {
        const double v = value_at(n, q, cn);
        const double cl = value_at(n, near_one, cn_cl);
        if (!(v > 0.0) || !std::isfinite(v) || !(cl > 0.0) || !std::isfinite(cl))
            throw std::logic_error("make_bound_table: bound values must be positive and finite");
        t.values.push_back(v);
        t.classical_limit.push_back(cl);
    }
    return t;
}

std::string bound_table_csv(const BoundTable& t) {
    std::string out = "n,value,classical_limit\n";
    char line[128];
    for (size_t i = 0; i < t.values.size(); ++i) {
        std::snprintf(line, sizeof line, "%d,%.6f,%.6f\n", t.n_lo + static_cast<int>(i),
                      t.values[i], t.classical_limit[i]);
        out += line;
    }
    return out;
}

}  // namespace qconvex
