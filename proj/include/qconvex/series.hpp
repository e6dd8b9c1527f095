#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace qconvex {

using Complex = std::complex<double>;

// Deformation parameter. Valid range is (0, 1]; q = 1 is accepted only by
// operations whose classical limit is well defined (they document it), the
// rest throw std::domain_error when handed q = 1.
struct QParam {
    double value;

    explicit QParam(double v) : value(v) {
        if (!(v > 0.0 && v <= 1.0))
            throw std::invalid_argument("QParam: q must lie in (0, 1]");
    }

    bool classical() const { return value == 1.0; }
};

// Power series truncated at a fixed order N, stored as a_0..a_N (exactly
// N + 1 coefficients). Values are immutable; every operation returns a
// fresh series.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("TruncatedSeries: at least the constant term is required");
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Complex& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    // a_0 = 0 and a_1 = 1, exactly.
    bool normalized() const {
        return c_.size() >= 2 && c_[0] == Complex(0.0) && c_[1] == Complex(1.0);
    }

  private:
    std::vector<Complex> c_;
};

// Finite sampling of the open unit disk: circles |z| = r with M equally
// spaced angles, z = r exp(2 pi i k / M), k = 0..M-1. z = 0 never appears.
struct DiskGrid {
    std::vector<double> radii;
    int angles_per_circle;

    DiskGrid(std::vector<double> r, int m) : radii(std::move(r)), angles_per_circle(m) {
        if (radii.empty())
            throw std::invalid_argument("DiskGrid: at least one radius required");
        for (double x : radii)
            if (!(x > 0.0 && x < 1.0))
                throw std::invalid_argument("DiskGrid: radii must lie in (0, 1)");
        if (m < 1)
            throw std::invalid_argument("DiskGrid: need a positive angle count");
    }

    double max_radius() const {
        double m = 0.0;
        for (double r : radii) m = std::max(m, r);
        return m;
    }
};

DiskGrid default_disk_grid();

// 1 + q + ... + q^{n-1}, the geometric form of (1 - q^n)/(1 - q). Summed
// explicitly so that q = 1 gives exactly n and q near 1 loses nothing to
// cancellation.
double q_bracket(QParam q, int n);

// Horner evaluation of f at z, |z| <= 1.
Complex eval(const TruncatedSeries& f, Complex z);

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex c);

// Cauchy product truncated to the smaller input order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(u) for u with vanishing constant term, via the differential
// recurrence E_0 = 1, n E_n = sum_{k=1..n} k u_k E_{n-k}.
TruncatedSeries exp_series(const TruncatedSeries& u);

// f(qz): a_n -> a_n q^n.
TruncatedSeries dilate(const TruncatedSeries& f, QParam q);

// (D_q f)(z) = (f(z) - f(qz)) / (z (1 - q)): coefficient of z^{n-1} is
// a_n (1 + q + ... + q^{n-1}). The constant term is a_1 = f'(0). At q = 1
// the bracket equals n exactly, giving the ordinary derivative.
TruncatedSeries q_difference(const TruncatedSeries& f, QParam q);

// (max_n |a_n|) r^{N+1} / (1 - r): bound on the discarded tail under the
// heuristic that the unseen coefficients stay below the observed maximum.
double tail_bound(const TruncatedSeries& f, double r);

}  // namespace qconvex
