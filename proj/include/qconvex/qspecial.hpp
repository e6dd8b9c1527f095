#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qconvex/series.hpp"

namespace qconvex {

// The nine integer-coefficient starlike functions z/(1 -+ z)-type: each is
// z divided by a polynomial with all zeros on |z| = 1.
enum class CatalogId {
    identity,
    cayley_plus,
    cayley_minus,
    koebe_plus,
    koebe_minus,
    lemniscate_plus,
    lemniscate_minus,
    hexic_plus,
    hexic_minus,
};

const char* catalog_tag(CatalogId id);
std::optional<CatalogId> parse_catalog_tag(std::string_view tag);

// Coefficients by closed form, not by division:
//   identity         z                 a_1 = 1
//   cayley_plus      z/(1-z)           a_n = 1
//   cayley_minus     z/(1+z)           a_n = (-1)^{n-1}
//   koebe_plus       z/(1-z)^2         a_n = n
//   koebe_minus      z/(1+z)^2         a_n = (-1)^{n-1} n
//   lemniscate_plus  z/(1-z^2)         a_{2m-1} = 1
//   lemniscate_minus z/(1+z^2)         a_{2m-1} = (-1)^{m-1}
//   hexic_plus       z/(1-z+z^2)       a_n cycles 1,1,0,-1,-1,0
//   hexic_minus      z/(1+z+z^2)       a_n cycles 1,-1,0,1,-1,0
TruncatedSeries friedman_catalog(CatalogId id, int order);

// The denominator polynomial of the same entry, padded to `order`, so that
// mul(friedman_catalog(id, N), catalog_denominator(id, N)) == z exactly.
TruncatedSeries catalog_denominator(CatalogId id, int order);

// (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k), empty product = 1.
Complex q_pochhammer(Complex a, QParam q, int n);

struct HypergeometricSpec {
    Complex a, b, c;
    double base;  // in (0, 1)
    int order;
};

// Basic hypergeometric series phi(a, b; c; q, z) truncated at spec.order.
// Rejects parameter choices where a denominator factor 1 - c q^n vanishes
// (|1 - c q^n| <= 1e-14 for some n <= order).
TruncatedSeries heine_phi(const HypergeometricSpec& spec);

// z * phi(q, q; q^2; q, z) = sum_n (1-q)/(1-q^n) z^n, built directly from
// the closed-form coefficients 1 / (1 + q + ... + q^{n-1}). Requires q < 1.
TruncatedSeries psi_series(QParam q, int order);

// sum_n z^n / (n (1 - q^n)). Requires q < 1.
TruncatedSeries quantum_dilog(QParam q, int order);

// (1 - q) * quantum_dilog: coefficients (1-q)/(n(1-q^n)), normalized since
// the n = 1 coefficient is exactly 1. Requires q < 1.
TruncatedSeries quantum_dilog_scaled(QParam q, int order);

// sum_n z^n / n^2.
TruncatedSeries dilog(int order);

// The extremal function k_q(z) = z exp(sum_{n>=1} u_n z^n) with
// u_n = -2 ln q / (1 - q^n). Requires 1e-6 <= q < 1.
TruncatedSeries kq_series(QParam q, int order);

// The same coefficients by the direct convolution recurrence
//   c_1 = 1,  (n-1) c_n = s_{n-1}(n-1) + sum_{k=2}^{n-1} s_{k-1} c_{n+1-k} (k-1),
// s_j = -2 ln q / (1 - q^j). Independent of kq_series (no exp_series call);
// the two must agree to roundoff.
std::vector<double> kq_coeffs_recurrence(QParam q, int order);

}  // namespace qconvex
