#include "qconvex/qspecial.hpp"

#include <cmath>

namespace qconvex {

namespace {

void require_subunit(QParam q, const char* who) {
    if (q.value >= 1.0)
        throw std::domain_error(std::string(who) + ": requires q < 1");
}

std::vector<Complex> zeros(int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return std::vector<Complex>(static_cast<size_t>(order) + 1);
}

}  // namespace

const char* catalog_tag(CatalogId id) {
    switch (id) {
        case CatalogId::identity: return "identity";
        case CatalogId::cayley_plus: return "cayley_plus";
        case CatalogId::cayley_minus: return "cayley_minus";
        case CatalogId::koebe_plus: return "koebe_plus";
        case CatalogId::koebe_minus: return "koebe_minus";
        case CatalogId::lemniscate_plus: return "lemniscate_plus";
        case CatalogId::lemniscate_minus: return "lemniscate_minus";
        case CatalogId::hexic_plus: return "hexic_plus";
        case CatalogId::hexic_minus: return "hexic_minus";
    }
    throw std::invalid_argument("catalog_tag: unknown id");
}

std::optional<CatalogId> parse_catalog_tag(std::string_view tag) {
    for (CatalogId id : {CatalogId::identity, CatalogId::cayley_plus, CatalogId::cayley_minus,
                         CatalogId::koebe_plus, CatalogId::koebe_minus, CatalogId::lemniscate_plus,
                         CatalogId::lemniscate_minus, CatalogId::hexic_plus, CatalogId::hexic_minus})
        if (tag == catalog_tag(id)) return id;
    return std::nullopt;
}

TruncatedSeries friedman_catalog(CatalogId id, int order) {
    auto c = zeros(order);
    auto at = [&](int n) -> Complex& { return c[static_cast<size_t>(n)]; };
    switch (id) {
        case CatalogId::identity:
            if (order >= 1) at(1) = 1.0;
            break;
        case CatalogId::cayley_plus:
            for (int n = 1; n <= order; ++n) at(n) = 1.0;
            break;
        case CatalogId::cayley_minus:
            for (int n = 1; n <= order; ++n) at(n) = (n % 2 == 1) ? 1.0 : -1.0;
            break;
        case CatalogId::koebe_plus:
            for (int n = 1; n <= order; ++n) at(n) = static_cast<double>(n);
            break;
        case CatalogId::koebe_minus:
            for (int n = 1; n <= order; ++n)
                at(n) = (n % 2 == 1) ? static_cast<double>(n) : -static_cast<double>(n);
            break;
        case CatalogId::lemniscate_plus:
            for (int n = 1; n <= order; n += 2) at(n) = 1.0;
            break;
        case CatalogId::lemniscate_minus:
            // a_{2m-1} = (-1)^{m-1}: n = 1, 5, 9, ... get +1, n = 3, 7, ... get -1
            for (int n = 1; n <= order; n += 2) at(n) = (((n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
            break;
        case CatalogId::hexic_plus: {
            // period six: 1, 1, 0, -1, -1, 0 starting at n = 1
            const double pat[6] = {1.0, 1.0, 0.0, -1.0, -1.0, 0.0};
            for (int n = 1; n <= order; ++n) at(n) = pat[(n - 1) % 6];
            break;
        }
        case CatalogId::hexic_minus: {
            const double pat[6] = {1.0, -1.0, 0.0, 1.0, -1.0, 0.0};
            for (int n = 1; n <= order; ++n) at(n) = pat[(n - 1) % 6];
            break;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries catalog_denominator(CatalogId id, int order) {
    auto c = zeros(order);
    auto set = [&](int n, double v) {
        if (n <= order) c[static_cast<size_t>(n)] = v;
    };
    set(0, 1.0);
    switch (id) {
        case CatalogId::identity: break;
        case CatalogId::cayley_plus: set(1, -1.0); break;
        case CatalogId::cayley_minus: set(1, 1.0); break;
        case CatalogId::koebe_plus: set(1, -2.0); set(2, 1.0); break;
        case CatalogId::koebe_minus: set(1, 2.0); set(2, 1.0); break;
        case CatalogId::lemniscate_plus: set(2, -1.0); break;
        case CatalogId::lemniscate_minus: set(2, 1.0); break;
        case CatalogId::hexic_plus: set(1, -1.0); set(2, 1.0); break;
        case CatalogId::hexic_minus: set(1, 1.0); set(2, 1.0); break;
    }
    return TruncatedSeries(std::move(c));
}

Complex q_pochhammer(Complex a, QParam q, int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: n must be nonnegative");
    Complex prod = 1.0;
    double p = 1.0;  // q^k
    for (int k = 0; k < n; ++k) {
        prod *= 1.0 - a * p;
        p *= q.value;
    }
    return prod;
}

TruncatedSeries heine_phi(const HypergeometricSpec& spec) {
    if (!(spec.base > 0.0 && spec.base < 1.0))
        throw std::invalid_argument("heine_phi: base must lie in (0, 1)");
    auto out = zeros(spec.order);
    // Reject a vanishing denominator factor anywhere in the truncation range.
    double p = 1.0;
    for (int n = 0; n <= spec.order; ++n) {
        if (std::abs(1.0 - spec.c * p) <= 1e-14)
            throw std::invalid_argument("heine_phi: 1 - c q^n vanishes inside the truncation range");
        p *= spec.base;
    }
    Complex term = 1.0;
    out[0] = term;
    double qm = 1.0;   // q^m
    double qm1 = spec.base;  // q^{m+1}
    for (int m = 0; m < spec.order; ++m) {
        term *= (1.0 - spec.a * qm) * (1.0 - spec.b * qm) / ((1.0 - spec.c * qm) * (1.0 - qm1));
        out[static_cast<size_t>(m) + 1] = term;
        qm *= spec.base;
        qm1 *= spec.base;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries psi_series(QParam q, int order) {
    require_subunit(q, "psi_series");
    auto c = zeros(order);
    double bracket = 0.0, p = 1.0;
    for (int n = 1; n <= order; ++n) {
        bracket += p;
        p *= q.value;
        c[static_cast<size_t>(n)] = 1.0 / bracket;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries quantum_dilog(QParam q, int order) {
    require_subunit(q, "quantum_dilog");
    auto c = zeros(order);
    double p = 1.0;  // q^n
    for (int n = 1; n <= order; ++n) {
        p *= q.value;
        c[static_cast<size_t>(n)] = 1.0 / (n * (1.0 - p));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries quantum_dilog_scaled(QParam q, int order) {
    require_subunit(q, "quantum_dilog_scaled");
    auto c = zeros(order);
    const double num = 1.0 - q.value;
    double p = 1.0;
    // n = 1 gives num / (1 * num) = 1 exactly, so the result is normalized.
    for (int n = 1; n <= order; ++n) {
        p *= q.value;
        c[static_cast<size_t>(n)] = num / (n * (1.0 - p));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries dilog(int order) {
    auto c = zeros(order);
    for (int n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = 1.0 / (static_cast<double>(n) * n);
    return TruncatedSeries(std::move(c));
}

namespace {

void require_kq_range(QParam q, int order, const char* who) {
    if (q.value >= 1.0 || q.value < 1e-6)
        throw std::domain_error(std::string(who) + ": requires 1e-6 <= q < 1");
    if (order < 1)
        throw std::invalid_argument(std::string(who) + ": order must be at least 1");
}

}  // namespace

TruncatedSeries kq_series(QParam q, int order) {
    require_kq_range(q, order, "kq_series");
    const double ell = -2.0 * std::log(q.value);
    std::vector<Complex> u(static_cast<size_t>(order));  // exponent truncated at order-1
    double p = 1.0;
    for (int n = 1; n <= order - 1; ++n) {
        p *= q.value;
        u[static_cast<size_t>(n)] = ell / (1.0 - p);
    }
    TruncatedSeries e = exp_series(TruncatedSeries(std::move(u)));
    auto c = zeros(order);
    for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = e[n - 1];
    return TruncatedSeries(std::move(c));
}

std::vector<double> kq_coeffs_recurrence(QParam q, int order) {
    require_kq_range(q, order, "kq_coeffs_recurrence");
    const double ell = -2.0 * std::log(q.value);
    std::vector<double> s(static_cast<size_t>(order), 0.0);
    double p = 1.0;
    for (int j = 1; j < order; ++j) {
        p *= q.value;
        s[static_cast<size_t>(j)] = ell / (1.0 - p);
    }
    std::vector<double> c(static_cast<size_t>(order) + 1, 0.0);
    c[1] = 1.0;
    for (int n = 2; n <= order; ++n) {
        double acc = s[static_cast<size_t>(n - 1)] * (n - 1);
        for (int k = 2; k <= n - 1; ++k)
            acc += s[static_cast<size_t>(k - 1)] * c[static_cast<size_t>(n + 1 - k)] * (k - 1);
        c[static_cast<size_t>(n)] = acc / (n - 1);
    }
    return c;
}

}  // namespace qconvex
