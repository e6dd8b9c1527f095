#pragma once

#include <optional>

#include "qconvex/series.hpp"

namespace qconvex {

// Grid plus tolerance policy for a membership check. When tol is empty the
// effective tolerance is 1e-9 + 10 * tail_note, coupling the acceptance
// threshold to the truncation quality at the outermost sampled radius.
struct CheckConfig {
    DiskGrid grid = default_disk_grid();
    std::optional<double> tol;  // must be >= 0 when set
};

// Outcome of sampling a margin function over the grid. The margin is
// designed so that the defining inequality of the class reads margin >= 0;
// holds is exactly (worst_margin >= -tol and no inconclusive samples).
struct Verdict {
    bool holds = false;
    double worst_margin = 0.0;
    Complex witness;             // sample attaining the worst margin
    double tail_note = 0.0;      // truncation tail bound at the largest radius
    double tol = 0.0;            // effective tolerance that was applied
    int inconclusive_points = 0; // samples where the candidate vanished
    Complex first_inconclusive;
};

enum class CheckKind {
    sq_star_def,         // |z D_q f / f - 1/(1-q)| <= 1/(1-q)
    sq_star_ratio,       // |f(qz) / f(z)| <= 1
    kq,                  // |z D_q f / g - 1/(1-q)| <= 1/(1-q)
    kq_lemma,            // |g(z) + f(qz) - f(z)| <= |g(z)|
    classical_starlike,  // Re(z g' / g) > 0
    classical_ctc,       // Re(z f' / g) > 0
};

// Margin at one grid sample. NaN-free: inconclusive marks candidate zeros.
struct MarginSample {
    Complex z;
    double radius = 0.0;
    int angle_index = 0;
    double margin = 0.0;
    bool inconclusive = false;
};

// Raw margin field, in deterministic grid order (radii as given, angles
// ascending). For single-function checks pass g = nullptr. Checks that
// divide by a reference g throw std::domain_error when |g(z)| < 1e-12
// ("reference not starlike at sample"); checks that divide by the
// candidate f mark such samples inconclusive instead.
std::vector<MarginSample> margin_profile(CheckKind kind, const TruncatedSeries& f,
                                         const TruncatedSeries* g, std::optional<QParam> q,
                                         const DiskGrid& grid);

// f normalized, 0 < q < 1.
Verdict check_sq_star_def(const TruncatedSeries& f, QParam q, const CheckConfig& cfg = {});
Verdict check_sq_star_ratio(const TruncatedSeries& f, QParam q, const CheckConfig& cfg = {});

// f, g normalized, 0 < q < 1; g is the starlike reference.
Verdict check_kq(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                 const CheckConfig& cfg = {});
Verdict check_kq_lemma(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                       const CheckConfig& cfg = {});

// Classical limits, using the q = 1 difference operator (exact derivative).
Verdict check_classical_starlike(const TruncatedSeries& g, const CheckConfig& cfg = {});
Verdict check_classical_ctc(const TruncatedSeries& f, const TruncatedSeries& g,
                            const CheckConfig& cfg = {});

}  // namespace qconvex
