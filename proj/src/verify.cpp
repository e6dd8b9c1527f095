#include "qconvex/verify.hpp"

#include <cmath>
#include <numbers>

#include "qconvex/bounds.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/io.hpp"
#include "qconvex/membership.hpp"
#include "qconvex/qspecial.hpp"

namespace qconvex {

namespace {

using nlohmann::json;

TruncatedSeries from_real(const std::vector<double>& a) {
    std::vector<Complex> c(a.begin(), a.end());
    return TruncatedSeries(std::move(c));
}

std::vector<double> brackets(QParam q, int n_max) {
    std::vector<double> s(static_cast<size_t>(n_max) + 1, 0.0);
    double acc = 0.0, p = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        acc += p;
        p *= q.value;
        s[static_cast<size_t>(n)] = acc;
    }
    return s;
}

// A from a prescribed plain-rule B (A_n = B_n / [n]).
std::vector<double> backsolve_plain(const std::vector<double>& b, QParam q) {
    const auto s = brackets(q, static_cast<int>(b.size()) - 1);
    std::vector<double> a(b.size(), 0.0);
    for (size_t n = 1; n < b.size(); ++n) a[n] = b[n] / s[n];
    return a;
}

// A from a prescribed consecutive_diff-rule B (cumulative sums start at
// A_1 [1] = 1; B has indices 0..N-1 with B_0 = 1).
std::vector<double> backsolve_consecutive(const std::vector<double>& b, QParam q) {
    const int n_max = static_cast<int>(b.size());
    const auto s = brackets(q, n_max);
    std::vector<double> a(static_cast<size_t>(n_max) + 1, 0.0);
    double cumulative = 1.0;  // A_n [n], starting from n = 1
    a[1] = 1.0;
    for (int n = 2; n <= n_max; ++n) {
        cumulative += b[static_cast<size_t>(n) - 1];
        a[static_cast<size_t>(n)] = cumulative / s[static_cast<size_t>(n)];
    }
    return a;
}

double max_rel_dev(const TruncatedSeries& f, const std::vector<double>& ref, int n_hi) {
    double worst = 0.0;
    for (int n = 1; n <= n_hi; ++n) {
        const double r = ref[static_cast<size_t>(n)];
        worst = std::max(worst, std::abs(f[n].real() - r) / std::max(1.0, std::abs(r)));
    }
    return worst;
}

bool near_negative_axis(Complex w) {
    // within ~1.5 angular grid steps of the negative real axis
    return w.real() < 0.0 && std::abs(std::numbers::pi - std::abs(std::arg(w))) < 0.02;
}

// Pointwise re-evaluation of the two membership margins, for cross-checking
// witnesses against each other's field.
double kq_margin_at(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                    Complex z) {
    const double radius = 1.0 / (1.0 - q.value);
    const Complex w = z * eval(q_difference(f, q), z) / eval(g, z);
    return radius - std::abs(w - radius);
}

double lemma_margin_at(const TruncatedSeries& f, const TruncatedSeries& g, QParam q,
                       Complex z) {
    const Complex gz = eval(g, z);
    const Complex num = gz + eval(f, q.value * z) - eval(f, z);
    return 1.0 - std::abs(num) / std::abs(gz);
}

struct SuiteBuilder {
    QParam q;
    int order;
    std::vector<CheckOutcome> out;

    void add(const std::string& name, bool ok, json detail) {
        out.push_back({name, ok ? "pass" : "fail", std::move(detail)});
    }

    void extremal_recurrence() {
        double worst = 0.0;
        const int n_hi = std::min(50, order);
        for (double qq : {0.1, 0.5, 0.9, q.value}) {
            const TruncatedSeries s = kq_series(QParam(qq), n_hi);
            const std::vector<double> r = kq_coeffs_recurrence(QParam(qq), n_hi);
            worst = std::max(worst, max_rel_dev(s, r, n_hi));
        }
        add("extremal-recurrence-crosscheck", worst <= 1e-10,
            {{"max_rel_deviation", worst}, {"n_max", n_hi}});
    }

    void psi_phi_agreement() {
        const int n = std::min(order, 256);
        const TruncatedSeries psi = psi_series(q, n);
        const TruncatedSeries phi = heine_phi({q.value, q.value, q.value * q.value, q.value, n - 1});
        double worst = 0.0, closed = 0.0;
        double p = q.value;  // q^{m+1}
        for (int m = 0; m <= n - 1; ++m) {
            worst = std::max(worst, std::abs(phi[m] - psi[m + 1]));
            closed = std::max(closed, std::abs(phi[m] - (1.0 - q.value) / (1.0 - p)));
            p *= q.value;
        }
        add("psi-phi-agreement", worst <= 1e-14 && closed <= 1e-14,
            {{"max_deviation", worst}, {"closed_form_deviation", closed}});
    }

    void derivative_identity() {
        const int n = std::min(order, 64);
        const IdentityReport rep = verify_series1_identity(q, n);
        add("bound-series-derivative-identity", rep.max_deviation <= 1e-12,
            {{"max_deviation", rep.max_deviation}, {"order_used", n}});
    }

    void closed_forms() {
        const int n = std::min(order, 64);
        const CorollaryReport rep = verify_identity_corollaries(q, n);
        add("hypergeometric-closed-forms",
            rep.phi_form.max_deviation <= 1e-12 && rep.psi_derivative_form.max_deviation <= 1e-12,
            {{"phi_form_deviation", rep.phi_form.max_deviation},
             {"psi_derivative_form_deviation", rep.psi_derivative_form.max_deviation}});
        // The squared-parameter form disagrees with the others from n = 4 on;
        // this is a property of the printed formula, reported as found.
        const bool as_documented = rep.phi_squared_form.first_mismatch == 4;
        out.push_back({"hypergeometric-squared-form",
                       as_documented ? "expected-mismatch" : "fail",
                       {{"first_mismatch", rep.phi_squared_form.first_mismatch},
                        {"max_deviation", rep.phi_squared_form.max_deviation}}});
    }

    void classical_limits() {
        const QParam near_one(1.0 - 1e-6);
        double worst = 0.0;
        auto track = [&](double value, double target) {
            worst = std::max(worst, std::abs(value - target) / std::abs(target));
        };
        for (int n = 2; n <= 20; ++n) {
            track(kq_bound(n, near_one), n);
            track(sq_product_bound(n, near_one), n);
            track(sq_cn_bound(n, near_one), n);
            track(kq_bound_for_reference(n, near_one, CatalogId::identity), 2.0 / n);
            track(kq_bound_for_reference(n, near_one, CatalogId::cayley_plus), (2.0 * n - 1) / n);
            track(kq_bound_for_reference(n, near_one, CatalogId::koebe_plus), n);
            track(kq_bound_for_reference(n, near_one, CatalogId::lemniscate_plus), 1.0);
            const double hex = kq_bound_for_reference(n, near_one, CatalogId::hexic_plus);
            if (n % 3 == 2) track(hex, (4.0 * n + 1) / (3.0 * n));
            if (n % 3 == 0) track(hex, 4.0 / 3.0);
            if (n % 3 == 1) track(hex, (4.0 * n - 1) / (3.0 * n));
            // independent telescoping oracle for the product bound at q -> 1:
            // prod (k+1)/(k-1) collapses to n(n-1)/2, so the bound tends to n
            const double oracle = 2.0 / (n - 1) * (n * (n - 1.0) / 2.0);
            track(oracle, n);
        }
        add("classical-limits", worst <= 1e-3, {{"max_rel_deviation", worst}, {"n_max", 20}});
    }

    void qdilog_criterion() {
        const TruncatedSeries f = quantum_dilog_scaled(q, order);
        const std::vector<double> a = real_coefficients(f);
        const std::vector<double> b = criterion_sequence(a, q, Rule::plain);
        double worst = 0.0;
        for (size_t n = 1; n < b.size(); ++n)
            worst = std::max(worst, std::abs(b[n] - 1.0 / static_cast<double>(n)));
        const CriterionResult mono = crit_monotone_halfplane(a, q);
        const CriterionResult sum = crit_sum_halfplane(a, q);
        add("scaled-qdilog-criterion", worst <= 1e-14 && mono.satisfied && sum.satisfied,
            {{"b_deviation_from_1_over_n", worst},
             {"monotone_satisfied", mono.satisfied},
             {"sum_statistic", sum.statistic}});
    }

    void qdilog_membership() {
        bool ok = true;
        json rows = json::array();
        for (double qq : {0.3, 0.5, 0.7, q.value}) {
            const QParam qp(qq);
            const TruncatedSeries f = quantum_dilog_scaled(qp, order);
            const TruncatedSeries g = friedman_catalog(CatalogId::cayley_plus, order);
            const Verdict v = check_kq(f, g, qp);
            ok = ok && v.holds;
            rows.push_back({{"q", qq}, {"holds", v.holds}, {"worst_margin", v.worst_margin}});
        }
        add("scaled-qdilog-membership", ok, {{"cases", std::move(rows)}});
    }

    void catalog_starlike() {
        bool ok = true;
        json rows = json::array();
        for (CatalogId id :
             {CatalogId::identity, CatalogId::cayley_plus, CatalogId::cayley_minus,
              CatalogId::koebe_plus, CatalogId::koebe_minus, CatalogId::lemniscate_plus,
              CatalogId::lemniscate_minus, CatalogId::hexic_plus, CatalogId::hexic_minus}) {
            const Verdict v = check_classical_starlike(friedman_catalog(id, order));
            ok = ok && v.holds;
            rows.push_back({{"g", catalog_tag(id)},
                            {"holds", v.holds},
                            {"worst_margin", v.worst_margin},
                            {"tol", v.tol}});
        }
        add("catalog-starlike", ok, {{"cases", std::move(rows)}});
    }

    void catalog_product() {
        double worst = 0.0;
        for (CatalogId id :
             {CatalogId::identity, CatalogId::cayley_plus, CatalogId::cayley_minus,
              CatalogId::koebe_plus, CatalogId::koebe_minus, CatalogId::lemniscate_plus,
              CatalogId::lemniscate_minus, CatalogId::hexic_plus, CatalogId::hexic_minus}) {
            const TruncatedSeries prod =
                mul(friedman_catalog(id, order), catalog_denominator(id, order));
            for (int n = 0; n <= prod.order(); ++n)
                worst = std::max(worst, std::abs(prod[n] - (n == 1 ? Complex(1.0) : Complex(0.0))));
        }
        add("catalog-product-identity", worst == 0.0, {{"max_deviation", worst}});
    }

    // Sequences certified by the coefficient criteria, paired with the
    // reference each criterion names.
    struct Certified {
        std::string name;
        TruncatedSeries f;
        CatalogId ref;
        bool satisfied;
    };

    std::vector<Certified> certified_corpus() {
        std::vector<Certified> cases;
        const int n = order;

        {
            const TruncatedSeries f = quantum_dilog_scaled(q, n);
            cases.push_back({"scaled-qdilog/monotone", f, CatalogId::cayley_plus,
                             crit_monotone_halfplane(real_coefficients(f), q).satisfied});
        }
        {
            const TruncatedSeries f = psi_series(q, n);
            cases.push_back({"psi/sum-halfplane", f, CatalogId::cayley_plus,
                             crit_sum_halfplane(real_coefficients(f), q).satisfied});
        }
        {
            const TruncatedSeries f = friedman_catalog(CatalogId::identity, n);
            cases.push_back({"identity/sum-halfplane", f, CatalogId::cayley_plus,
                             crit_sum_halfplane(real_coefficients(f), q).satisfied});
            cases.push_back({"identity/odd-sum", f, CatalogId::lemniscate_plus,
                             crit_odd_lemniscate(real_coefficients(f), q).satisfied});
            cases.push_back({"identity/two-step", f, CatalogId::lemniscate_plus,
                             crit_two_step(real_coefficients(f), q).satisfied});
        }
        {
            // consecutive_diff chain B_n = 1/(n+1): A_n [n] = harmonic numbers
            std::vector<double> b(static_cast<size_t>(n), 0.0);
            b[0] = 1.0;
            for (int k = 1; k < n; ++k) b[static_cast<size_t>(k)] = 1.0 / (k + 1.0);
            const std::vector<double> a = backsolve_consecutive(b, q);
            cases.push_back({"harmonic/koebe-chain", from_real(a), CatalogId::koebe_plus,
                             crit_koebe(a, q, CritVariant::chain).satisfied});
        }
        {
            // plain-rule odd chain B_{2m-1} = 1/(2m-1)
            std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
            for (int k = 1; k <= n; k += 2) b[static_cast<size_t>(k)] = 1.0 / k;
            const std::vector<double> a = backsolve_plain(b, q);
            cases.push_back({"odd-reciprocal/lemniscate-chain", from_real(a),
                             CatalogId::lemniscate_plus,
                             crit_odd_lemniscate(a, q, CritVariant::chain).satisfied});
        }
        {
            // plain-rule B = 1, 0, 1, 0, ... (two-step constant)
            std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
            for (int k = 1; k <= n; k += 2) b[static_cast<size_t>(k)] = 1.0;
            const std::vector<double> a = backsolve_plain(b, q);
            cases.push_back({"alternating/two-step", from_real(a), CatalogId::lemniscate_plus,
                             crit_two_step(a, q).satisfied});
        }
        {
            // plain-rule B with period six 1, 1, 0, -1, -1, 0 from index 1:
            // every hexic summand vanishes
            const double pat[6] = {1.0, 1.0, 0.0, -1.0, -1.0, 0.0};
            std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
            for (int k = 1; k <= n; ++k) b[static_cast<size_t>(k)] = pat[(k - 1) % 6];
            const std::vector<double> a = backsolve_plain(b, q);
            cases.push_back({"period-six/hexic-sum", from_real(a), CatalogId::hexic_plus,
                             crit_hexic(a, q).satisfied});
        }
        return cases;
    }

    void criteria_sufficiency() {
        bool ok = true;
        json rows = json::array();
        for (const Certified& c : certified_corpus()) {
            const Verdict v = check_kq(c.f, friedman_catalog(c.ref, order), q);
            const bool row_ok = c.satisfied && v.holds;
            ok = ok && row_ok;
            rows.push_back({{"case", c.name},
                            {"certified", c.satisfied},
                            {"membership_holds", v.holds},
                            {"worst_margin", v.worst_margin}});
        }
        add("criteria-membership-sufficiency", ok, {{"cases", std::move(rows)}});
    }

    void corpus_coefficient_bounds() {
        bool ok = true;
        json rows = json::array();
        const int n_hi = std::min(order, 64);
        for (const Certified& c : certified_corpus()) {
            double worst_excess = -1e300;
            for (int n = 2; n <= n_hi; ++n) {
                const double excess =
                    std::abs(c.f[n]) - kq_bound_for_reference(n, q, c.ref);
                worst_excess = std::max(worst_excess, excess);
            }
            const bool row_ok = worst_excess <= 1e-9;
            ok = ok && row_ok;
            rows.push_back({{"case", c.name}, {"worst_excess", worst_excess}});
        }
        add("coefficient-bounds-on-corpus", ok, {{"cases", std::move(rows)}});
    }

    void equivalence() {
        struct Pair {
            std::string name;
            TruncatedSeries f, g;
        };
        std::vector<Pair> pairs;
        for (CatalogId id :
             {CatalogId::identity, CatalogId::cayley_plus, CatalogId::cayley_minus,
              CatalogId::koebe_plus, CatalogId::koebe_minus, CatalogId::lemniscate_plus,
              CatalogId::lemniscate_minus, CatalogId::hexic_plus, CatalogId::hexic_minus}) {
            TruncatedSeries s = friedman_catalog(id, order);
            pairs.push_back({std::string("catalog/") + catalog_tag(id), s, s});
        }
        pairs.push_back({"scaled-qdilog/cayley", quantum_dilog_scaled(q, order),
                         friedman_catalog(CatalogId::cayley_plus, order)});
        pairs.push_back({"psi/cayley", psi_series(q, order),
                         friedman_catalog(CatalogId::cayley_plus, order)});
        for (const Certified& c : certified_corpus())
            if (c.name == "harmonic/koebe-chain" || c.name == "odd-reciprocal/lemniscate-chain")
                pairs.push_back({c.name, c.f, friedman_catalog(c.ref, order)});

        // The two margin fields are proportional (factor 1-q), so they share
        // argmins.  On flat or symmetric fields several grid points tie at the
        // minimum to machine precision and the two formulas may break the tie
        // differently; witnesses then match in the sense that each achieves the
        // other field's worst margin.
        const double grid_step = 2.0 * std::numbers::pi * 0.95 / 720.0;
        bool ok = true;
        json rows = json::array();
        for (const Pair& p : pairs) {
            const Verdict a = check_kq(p.f, p.g, q);
            const Verdict b = check_kq_lemma(p.f, p.g, q);
            const double wdist = std::abs(a.witness - b.witness);
            const double margin_gap =
                std::abs(b.worst_margin - (1.0 - q.value) * a.worst_margin);
            const bool margins_match =
                margin_gap <= 1e-9 * std::max(1.0, std::abs(a.worst_margin));
            bool witness_match = wdist <= 1.5 * grid_step;
            if (!witness_match) {
                const double cross_a = kq_margin_at(p.f, p.g, q, b.witness);
                const double cross_b = lemma_margin_at(p.f, p.g, q, a.witness);
                witness_match =
                    std::abs(cross_a - a.worst_margin) <=
                        1e-9 * std::max(1.0, std::abs(a.worst_margin)) &&
                    std::abs(cross_b - b.worst_margin) <=
                        1e-9 * std::max(1.0, std::abs(b.worst_margin));
            }
            const bool row_ok = (a.holds == b.holds) && margins_match && witness_match;
            ok = ok && row_ok;
            rows.push_back({{"case", p.name},
                            {"holds", a.holds},
                            {"lemma_holds", b.holds},
                            {"margin_gap", margin_gap},
                            {"witness_distance", wdist},
                            {"witness_match", witness_match}});
        }
        add("definition-lemma-equivalence", ok,
            {{"pairs", static_cast<int>(pairs.size())}, {"cases", std::move(rows)}});
    }

    void negative_controls() {
        std::vector<Complex> c(static_cast<size_t>(order) + 1);
        c[1] = 1.0;
        c[2] = 2.0;
        const TruncatedSeries f(std::move(c));
        const TruncatedSeries g = friedman_catalog(CatalogId::cayley_plus, order);
        CheckConfig strict;
        strict.tol = 1e-9;

        const Verdict ratio = check_sq_star_ratio(f, q, strict);
        const Verdict kq = check_kq(f, g, q, strict);
        const bool ok = !ratio.holds && !kq.holds && near_negative_axis(ratio.witness) &&
                        near_negative_axis(kq.witness);
        add("negative-controls", ok,
            {{"ratio_holds", ratio.holds},
             {"ratio_worst_margin", ratio.worst_margin},
             {"ratio_witness", {ratio.witness.real(), ratio.witness.imag()}},
             {"kq_holds", kq.holds},
             {"kq_worst_margin", kq.worst_margin},
             {"kq_witness", {kq.witness.real(), kq.witness.imag()}}});
    }

    void radius() {
        std::vector<double> a;
        for (int n = 2; n <= 200; ++n) a.push_back(sq_product_bound(n, q));
        const double est = radius_estimate(a);
        const double target = q.value / (q.value + 1.0 - q.value * q.value);
        const bool ok = std::abs(est - target) <= 0.01 * target;
        add("radius-estimate", ok, {{"estimate", est}, {"target", target}});
    }
};

}  // namespace

std::vector<CheckOutcome> run_verification_suite(QParam q, int order) {
    if (q.value >= 1.0)
        throw std::domain_error("verification suite requires q < 1");
    if (order < 8)
        throw std::invalid_argument("verification suite requires order >= 8");
    SuiteBuilder b{q, order, {}};
    b.extremal_recurrence();
    b.psi_phi_agreement();
    b.derivative_identity();
    b.closed_forms();
    b.classical_limits();
    b.qdilog_criterion();
    b.qdilog_membership();
    b.catalog_starlike();
    b.catalog_product();
    b.criteria_sufficiency();
    b.corpus_coefficient_bounds();
    b.equivalence();
    b.negative_controls();
    b.radius();
    return b.out;
}

bool suite_passed(const std::vector<CheckOutcome>& outcomes) {
    for (const CheckOutcome& o : outcomes)
        if (o.status == "fail") return false;
    return true;
}

}  // namespace qconvex
