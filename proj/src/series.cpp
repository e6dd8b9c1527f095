#include "qconvex/series.hpp"

#include <algorithm>
#include <cmath>

namespace qconvex {

DiskGrid default_disk_grid() { return DiskGrid({0.5, 0.8, 0.95}, 720); }

double q_bracket(QParam q, int n) {
    double s = 0.0, p = 1.0;
    for (int j = 0; j < n; ++j) {
        s += p;
        p *= q.value;
    }
    return s;
}

Complex eval(const TruncatedSeries& f, Complex z) {
    if (std::abs(z) > 1.0)
        throw std::domain_error("eval: |z| > 1 is outside the disk of validity");
    Complex acc = 0.0;
    for (int n = f.order(); n >= 0; --n) acc = acc * z + f[n];
    return acc;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    int n = std::min(f.order(), g.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = f[k] + g[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& f, Complex c) {
    std::vector<Complex> out(f.coeffs());
    for (auto& a : out) a *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    int n = std::min(f.order(), g.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Complex s = 0.0;
        for (int k = 0; k <= m; ++k) s += f[k] * g[m - k];
        c[static_cast<size_t>(m)] = s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_series(const TruncatedSeries& u) {
    if (!(u[0] == Complex(0.0)))
        throw std::invalid_argument("exp_series: constant term must vanish");
    int n = u.order();
    std::vector<Complex> e(static_cast<size_t>(n) + 1);
    e[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        Complex s = 0.0;
        for (int k = 1; k <= m; ++k) s += static_cast<double>(k) * u[k] * e[static_cast<size_t>(m - k)];
        e[static_cast<size_t>(m)] = s / static_cast<double>(m);
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries dilate(const TruncatedSeries& f, QParam q) {
    std::vector<Complex> c(f.coeffs());
    double p = 1.0;
    for (size_t k = 1; k < c.size(); ++k) {
        p *= q.value;
        c[k] *= p;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries q_difference(const TruncatedSeries& f, QParam q) {
    int n = f.order();
    std::vector<Complex> out(static_cast<size_t>(std::max(n, 1)));
    double bracket = 0.0, p = 1.0;
    for (int k = 1; k <= n; ++k) {
        bracket += p;  // 1 + q + ... + q^{k-1}
        p *= q.value;
        out[static_cast<size_t>(k - 1)] = f[k] * bracket;
    }
    return TruncatedSeries(std::move(out));
}

double tail_bound(const TruncatedSeries& f, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("tail_bound: radius must lie in (0, 1)");
    double m = 0.0;
    for (const auto& a : f.coeffs()) m = std::max(m, std::abs(a));
    return m * std::pow(r, f.order() + 1) / (1.0 - r);
}

}  // namespace qconvex
