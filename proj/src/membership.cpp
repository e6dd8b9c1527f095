#include "qconvex/membership.hpp"

#include <cmath>
#include <numbers>

namespace qconvex {

namespace {

constexpr double kVanish = 1e-12;

bool needs_q(CheckKind kind) {
    return kind == CheckKind::sq_star_def || kind == CheckKind::sq_star_ratio ||
           kind == CheckKind::kq || kind == CheckKind::kq_lemma;
}

bool takes_reference(CheckKind kind) {
    return kind == CheckKind::kq || kind == CheckKind::kq_lemma ||
           kind == CheckKind::classical_ctc;
}

// Margin evaluator for one check. All margins are >= 0 exactly when the
// class inequality holds at the point; the half-plane conditions use the
// disk form R - |w - R| with R = 1/(1-q) (or plain real part at q = 1).
struct Evaluator {
    CheckKind kind;
    const TruncatedSeries& f;
    const TruncatedSeries* g;
    std::optional<QParam> q;
    std::optional<TruncatedSeries> df;  // D_q f (or f' for classical kinds)

    Evaluator(CheckKind k, const TruncatedSeries& f_, const TruncatedSeries* g_,
              std::optional<QParam> q_)
        : kind(k), f(f_), g(g_), q(q_) {
        if (needs_q(kind)) {
            if (!q)
                throw std::invalid_argument("membership: this check requires q");
            if (q->value >= 1.0)
                throw std::domain_error("membership: this check requires q < 1");
        }
        if (takes_reference(kind) && g == nullptr)
            throw std::invalid_argument("membership: this check requires a reference g");
        if (!f.normalized())
            throw std::invalid_argument("membership: candidate must be normalized (f = z + ...)");
        if (g != nullptr && !g->normalized())
            throw std::invalid_argument("membership: reference must be normalized (g = z + ...)");
        switch (kind) {
            case CheckKind::sq_star_def:
            case CheckKind::kq:
                df = q_difference(f, *q);
                break;
            case CheckKind::classical_starlike:
            case CheckKind::classical_ctc:
                df = q_difference(f, QParam(1.0));
                break;
            default:
                break;
        }
    }

    // Empty result marks an inconclusive sample (candidate vanished).
    std::optional<double> margin(Complex z) const {
        switch (kind) {
            case CheckKind::sq_star_def: {
                Complex fz = eval(f, z);
                if (std::abs(fz) < kVanish) return std::nullopt;
                const double r = 1.0 / (1.0 - q->value);
                Complex w = z * eval(*df, z) / fz;
                return r - std::abs(w - r);
            }
            case CheckKind::sq_star_ratio: {
                Complex fz = eval(f, z);
                if (std::abs(fz) < kVanish) return std::nullopt;
                return 1.0 - std::abs(eval(f, Complex(q->value) * z) / fz);
            }
            case CheckKind::kq: {
                Complex gz = eval(*g, z);
                if (std::abs(gz) < kVanish)
                    throw std::domain_error("membership: reference not starlike at sample");
                const double r = 1.0 / (1.0 - q->value);
                Complex w = z * eval(*df, z) / gz;
                return r - std::abs(w - r);
            }
            case CheckKind::kq_lemma: {
                Complex gz = eval(*g, z);
                if (std::abs(gz) < kVanish)
                    throw std::domain_error("membership: reference not starlike at sample");
                Complex num = gz + eval(f, Complex(q->value) * z) - eval(f, z);
                return 1.0 - std::abs(num) / std::abs(gz);
            }
            case CheckKind::classical_starlike: {
                // Single-function check: the input plays both roles.
                Complex fz = eval(f, z);
                if (std::abs(fz) < kVanish) return std::nullopt;
                return (z * eval(*df, z) / fz).real();
            }
            case CheckKind::classical_ctc: {
                Complex gz = eval(*g, z);
                if (std::abs(gz) < kVanish)
                    throw std::domain_error("membership: reference not starlike at sample");
                return (z * eval(*df, z) / gz).real();
            }
        }
        throw std::logic_error("membership: unknown check kind");
    }
};

Verdict run_check(CheckKind kind, const TruncatedSeries& f, const TruncatedSeries* g,
                  std::optional<QParam> q, const CheckConfig& cfg) {
    if (cfg.tol && !(*cfg.tol >= 0.0))
        throw std::invalid_argument("membership: tolerance must be nonnegative");
    Evaluator ev(kind, f, g, q);

    Verdict v;
    const double rmax = cfg.grid.max_radius();
    v.tail_note = tail_bound(f, rmax);
    if (g != nullptr) v.tail_note = std::max(v.tail_note, tail_bound(*g, rmax));
    v.tol = cfg.tol ? *cfg.tol : 1e-9 + 10.0 * v.tail_note;

    bool have_margin = false;
    for (double r : cfg.grid.radii) {
        for (int k = 0; k < cfg.grid.angles_per_circle; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / cfg.grid.angles_per_circle;
            const Complex z = std::polar(r, theta);
            std::optional<double> m = ev.margin(z);
            if (!m) {
                if (v.inconclusive_points == 0) v.first_inconclusive = z;
                ++v.inconclusive_points;
                continue;
            }
            if (!have_margin || *m < v.worst_margin) {
                v.worst_margin = *m;
                v.witness = z;
                have_margin = true;
            }
        }
    }
    v.holds = have_margin && v.inconclusive_points == 0 && v.worst_margin >= -v.tol;
    return v;
}

}  // namespace

std::vector<MarginSample> margin_profile(CheckKind kind, const TruncatedSeries& f,
                                         const TruncatedSeries* g, std::optional<QParam> q,
                                         const DiskGrid& grid) {
    Evaluator ev(kind, f, g, q);
    std::vector<MarginSample> out;
    out.reserve(grid.radii.size() * static_cast<size_t>(grid.angles_per_circle));
    for (double r : grid.radii) {
        for (int k = 0; k < grid.angles_per_circle; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / grid.angles_per_circle;
            MarginSample s;
            s.z = std::polar(r, theta);
            s.radius = r;
            s.angle_index = k;
            std::optional<double> m = ev.margin(s.z);
            if (m) s.margin = *m;
            s.inconclusive = !m.has_value();
            out.push_back(s);
        }
    }
    return out;
}

Verdict check_sq_star_def(const TruncatedSeries& f, QParam q, const CheckConfig& cfg) {
    return run_check(CheckKind::sq_star_def, f, nullptr, q, cfg);
}

Verdict check_sq_star_ratio(const TruncatedSeries& f, QParam q, const CheckConfig& cfg) {
    return run_check(CheckKind::sq_star_ratio, f, nullptr, q, cfg);
}

Verdict check_kq(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                 const CheckConfig& cfg) {
    return run_check(CheckKind::kq, f, &g, q, cfg);
}

Verdict check_kq_lemma(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                       const CheckConfig& cfg) {
    return run_check(CheckKind::kq_lemma, f, &g, q, cfg);
}

Verdict check_classical_starlike(const TruncatedSeries& g, const CheckConfig& cfg) {
    return run_check(CheckKind::classical_starlike, g, nullptr, std::nullopt, cfg);
}

Verdict check_classical_ctc(const TruncatedSeries& f, const TruncatedSeries& g,
                            const CheckConfig& cfg) {
    return run_check(CheckKind::classical_ctc, f, &g, std::nullopt, cfg);
}

}  // namespace qconvex
