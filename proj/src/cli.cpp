#include "qconvex/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "qconvex/bounds.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/io.hpp"
#include "qconvex/membership.hpp"
#include "qconvex/qspecial.hpp"
#include "qconvex/series.hpp"
#include "qconvex/verify.hpp"

namespace qconvex::cli {
namespace {

using nlohmann::json;

// Only the CLI's own |z| >= 1 pre-check raises this; every library error
// maps to exit 2.
struct DomainViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double q = 0.5;
    int order = 64;  // QCONVEX_ORDER replaces this default; --order beats both
    std::vector<double> radii{0.5, 0.8, 0.95};
    int angles = 720;
    double tol = -1.0;  // negative selects the automatic tolerance
    std::string format = "json";
    std::string out;  // empty: stdout
};

int default_order() {
    const char* s = std::getenv("QCONVEX_ORDER");
    if (s == nullptr || *s == '\0') return 64;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0')
        throw std::invalid_argument("QCONVEX_ORDER is not an integer");
    return static_cast<int>(v);
}

void emit(const RunConfig& cfg, std::string text) {
    if (text.empty() || text.back() != '\n') text.push_back('\n');
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + cfg.out);
    os << text;
    os.flush();
    if (!os) throw std::runtime_error("cannot write output file: " + cfg.out);
}

std::string num17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

double parse_double_strict(const std::string& raw) {
    const std::string s = trimmed(raw);
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (...) {
        throw std::invalid_argument("not a number: '" + raw + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: '" + raw + "'");
    return v;
}

int parse_int_strict(const std::string& raw) {
    const std::string s = trimmed(raw);
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        throw std::invalid_argument("not an integer: '" + raw + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not an integer: '" + raw + "'");
    return v;
}

// "re" or "re,im", semicolon-separated: "0.5; -0.2,0.1; 0"
std::vector<Complex> parse_points(const std::string& spec) {
    std::vector<Complex> pts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (trimmed(item).empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) {
            pts.emplace_back(parse_double_strict(item), 0.0);
        } else {
            pts.emplace_back(parse_double_strict(item.substr(0, comma)),
                             parse_double_strict(item.substr(comma + 1)));
        }
    }
    if (pts.empty()) throw std::invalid_argument("no evaluation points given");
    return pts;
}

// "k" or "a..b"
std::pair<int, int> parse_range(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        const int k = parse_int_strict(spec);
        return {k, k};
    }
    return {parse_int_strict(spec.substr(0, dots)), parse_int_strict(spec.substr(dots + 2))};
}

// Catalog tag, builtin series name, or a series file path.
TruncatedSeries resolve_series(const std::string& designator, const RunConfig& cfg) {
    if (auto id = parse_catalog_tag(designator)) return friedman_catalog(*id, cfg.order);
    if (designator == "kq") return kq_series(QParam(cfg.q), cfg.order);
    if (designator == "psi") return psi_series(QParam(cfg.q), cfg.order);
    if (designator == "quantum_dilog") return quantum_dilog(QParam(cfg.q), cfg.order);
    if (designator == "quantum_dilog_scaled")
        return quantum_dilog_scaled(QParam(cfg.q), cfg.order);
    if (designator == "dilog") return dilog(cfg.order);
    return read_series_file(designator).series;
}

int cmd_eval(const RunConfig& cfg, const std::string& fn, const std::string& points_spec) {
    const std::vector<Complex> pts = parse_points(points_spec);
    for (Complex z : pts)
        if (std::abs(z) >= 1.0)
            throw DomainViolation("evaluation point outside the open unit disk: " +
                                  num17(z.real()) + "," + num17(z.imag()));
    const TruncatedSeries f = resolve_series(fn, cfg);

    if (cfg.format == "csv") {
        std::string text = "z_re,z_im,value_re,value_im\n";
        for (Complex z : pts) {
            const Complex v = eval(f, z);
            text += num17(z.real()) + "," + num17(z.imag()) + "," + num17(v.real()) + "," +
                    num17(v.imag()) + "\n";
        }
        emit(cfg, std::move(text));
        return 0;
    }
    json values = json::array();
    for (Complex z : pts) {
        const Complex v = eval(f, z);
        values.push_back({{"z", {z.real(), z.imag()}}, {"value", {v.real(), v.imag()}}});
    }
    emit(cfg, json{{"command", "eval"},
                   {"fn", fn},
                   {"q", cfg.q},
                   {"order", f.order()},
                   {"values", std::move(values)}}
                  .dump(2));
    return 0;
}

int cmd_coeffs(const RunConfig& cfg, const std::string& fn, std::optional<int> index) {
    const TruncatedSeries f = resolve_series(fn, cfg);
    if (index) {
        if (*index < 0 || *index > f.order())
            throw std::invalid_argument("coefficient index out of range");
        const Complex c = f[*index];
        if (cfg.format == "csv") {
            emit(cfg, "n,re,im\n" + std::to_string(*index) + "," + num17(c.real()) + "," +
                          num17(c.imag()) + "\n");
        } else {
            emit(cfg, json{{"command", "coeffs"},
                           {"fn", fn},
                           {"q", cfg.q},
                           {"order", f.order()},
                           {"n", *index},
                           {"coefficient", {c.real(), c.imag()}}}
                          .dump(2));
        }
        return 0;
    }
    if (cfg.format == "csv") {
        std::string text = "n,re,im\n";
        for (int n = 0; n <= f.order(); ++n)
            text += std::to_string(n) + "," + num17(f[n].real()) + "," + num17(f[n].imag()) +
                    "\n";
        emit(cfg, std::move(text));
        return 0;
    }
    // Full-series JSON is exactly the interchange format, so the report
    // file feeds straight back into eval/check commands.
    emit(cfg, series_to_json(f, fn).dump(2));
    return 0;
}

struct KindInfo {
    CheckKind kind;
    bool needs_g;
    bool needs_q;
};

KindInfo parse_check_kind(const std::string& name) {
    if (name == "sq-def") return {CheckKind::sq_star_def, false, true};
    if (name == "sq-ratio") return {CheckKind::sq_star_ratio, false, true};
    if (name == "kq") return {CheckKind::kq, true, true};
    if (name == "kq-lemma") return {CheckKind::kq_lemma, true, true};
    if (name == "classical-starlike") return {CheckKind::classical_starlike, false, false};
    if (name == "classical-ctc") return {CheckKind::classical_ctc, true, false};
    throw std::invalid_argument("unknown check: " + name);
}

int cmd_check_membership(const RunConfig& cfg, const DiskGrid& grid, const std::string& f_name,
                         const std::string& g_name, std::string check_name) {
    if (check_name.empty()) check_name = g_name.empty() ? "sq-def" : "kq";
    const KindInfo info = parse_check_kind(check_name);
    if (info.needs_g && g_name.empty())
        throw std::invalid_argument("--g is required for check '" + check_name + "'");
    if (!info.needs_g && !g_name.empty())
        throw std::invalid_argument("check '" + check_name + "' takes no reference --g");

    const TruncatedSeries f = resolve_series(f_name, cfg);
    std::optional<TruncatedSeries> g;
    if (info.needs_g) g = resolve_series(g_name, cfg);

    CheckConfig ccfg{grid, cfg.tol >= 0.0 ? std::optional<double>(cfg.tol) : std::nullopt};
    Verdict v;
    switch (info.kind) {
        case CheckKind::sq_star_def: v = check_sq_star_def(f, QParam(cfg.q), ccfg); break;
        case CheckKind::sq_star_ratio: v = check_sq_star_ratio(f, QParam(cfg.q), ccfg); break;
        case CheckKind::kq: v = check_kq(f, *g, QParam(cfg.q), ccfg); break;
        case CheckKind::kq_lemma: v = check_kq_lemma(f, *g, QParam(cfg.q), ccfg); break;
        case CheckKind::classical_starlike: v = check_classical_starlike(f, ccfg); break;
        case CheckKind::classical_ctc: v = check_classical_ctc(f, *g, ccfg); break;
    }

    if (cfg.format == "csv") {
        // Plot data: one row per grid sample; inconclusive samples carry nan.
        const std::optional<QParam> qp =
            info.needs_q ? std::optional<QParam>(QParam(cfg.q)) : std::nullopt;
        const auto samples =
            margin_profile(info.kind, f, info.needs_g ? &*g : nullptr, qp, grid);
        std::string text = "radius,theta,margin\n";
        for (const MarginSample& s : samples) {
            const double theta =
                2.0 * std::numbers::pi * s.angle_index / grid.angles_per_circle;
            text += num17(s.radius) + "," + num17(theta) + "," +
                    (s.inconclusive ? std::string("nan") : num17(s.margin)) + "\n";
        }
        emit(cfg, std::move(text));
    } else {
        json j{{"command", "check-membership"},
               {"check", check_name},
               {"f", f_name},
               {"verdict", verdict_to_json(v, grid)}};
        if (info.needs_g) j["g"] = g_name;
        if (info.needs_q) j["q"] = cfg.q;
        emit(cfg, j.dump(2));
    }
    return v.holds ? 0 : 1;
}

int cmd_check_criteria(const RunConfig& cfg, const std::string& f_name,
                       const std::string& criterion_name, const std::string& variant_name) {
    const TruncatedSeries f = resolve_series(f_name, cfg);
    const std::vector<double> a = real_coefficients(f);
    const QParam q(cfg.q);

    const bool single_form =
        criterion_name == "sum-halfplane" || criterion_name == "monotone-halfplane";
    if (single_form && !variant_name.empty())
        throw std::invalid_argument("criterion '" + criterion_name + "' has a single form");
    const CritVariant variant =
        (variant_name == "chain") ? CritVariant::chain : CritVariant::sum;

    CriterionResult r;
    if (criterion_name == "sum-halfplane") r = crit_sum_halfplane(a, q);
    else if (criterion_name == "monotone-halfplane") r = crit_monotone_halfplane(a, q);
    else if (criterion_name == "koebe") r = crit_koebe(a, q, variant);
    else if (criterion_name == "odd-lemniscate") r = crit_odd_lemniscate(a, q, variant);
    else if (criterion_name == "two-step") r = crit_two_step(a, q, variant);
    else if (criterion_name == "hexic") r = crit_hexic(a, q, variant);
    else throw std::invalid_argument("unknown criterion: " + criterion_name);

    if (cfg.format == "csv") {
        std::string text =
            "satisfied,statistic,budget,first_violation,converged,last_increment,certifies\n";
        text += std::string(r.satisfied ? "true" : "false") + "," + num17(r.statistic) + "," +
                num17(r.budget) + "," +
                (r.first_violation ? std::to_string(*r.first_violation) : std::string()) +
                "," + (r.converged ? "true" : "false") + "," + num17(r.last_increment) + "," +
                catalog_tag(r.certifies) + "\n";
        emit(cfg, std::move(text));
    } else {
        json j{{"command", "check-criteria"},
               {"criterion", criterion_name},
               {"f", f_name},
               {"q", cfg.q},
               {"result", criterion_to_json(r)}};
        if (!single_form) j["variant"] = (variant == CritVariant::chain) ? "chain" : "sum";
        emit(cfg, j.dump(2));
    }
    return r.satisfied ? 0 : 1;
}

int cmd_bounds(const RunConfig& cfg, const std::string& class_tag_name,
               const std::string& range_spec, double eps) {
    const auto cls = parse_bound_class(class_tag_name);
    if (!cls) throw std::invalid_argument("unknown bound class: " + class_tag_name);
    int lo = 2, hi = cfg.order;
    if (!range_spec.empty()) std::tie(lo, hi) = parse_range(range_spec);
    if (lo < 1 || hi < lo || hi > 4096)
        throw std::invalid_argument("bad index range (need 1 <= lo <= hi <= 4096)");
    const BoundTable t = make_bound_table(*cls, QParam(cfg.q), lo, hi, eps);
    emit(cfg, cfg.format == "csv" ? bound_table_csv(t) : bound_table_to_json(t).dump(2));
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const std::vector<CheckOutcome> outcomes = run_verification_suite(QParam(cfg.q), cfg.order);
    const bool passed = suite_passed(outcomes);
    if (cfg.format == "csv") {
        std::string text = "name,status\n";
        for (const CheckOutcome& o : outcomes) text += o.name + "," + o.status + "\n";
        emit(cfg, std::move(text));
    } else {
        json checks = json::array();
        for (const CheckOutcome& o : outcomes)
            checks.push_back({{"name", o.name}, {"status", o.status}, {"detail", o.detail}});
        emit(cfg, json{{"command", "verify"},
                       {"q", cfg.q},
                       {"order", cfg.order},
                       {"passed", passed},
                       {"checks", std::move(checks)}}
                      .dump(2));
    }
    return passed ? 0 : 1;
}

int run_impl(int argc, const char* const* argv) {
    CLI::App app{"q-deformed starlike / close-to-convex verification toolkit", "qconvex"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.order = default_order();

    app.add_option("--q", cfg.q, "deformation parameter in (0, 1]")->capture_default_str();
    app.add_option("--order", cfg.order, "truncation order, 8..4096")->capture_default_str();
    app.add_option("--radii", cfg.radii, "sampling circle radii in (0, 1)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--angles", cfg.angles, "samples per circle")->capture_default_str();
    app.add_option("--tol", cfg.tol, "margin tolerance; negative selects automatic")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write the report to this file instead of stdout");

    std::string fn, points_spec, f_name, g_name, check_name, criterion_name, variant_name;
    std::string class_tag_name, range_spec;
    int coeff_index = -1;
    double eps = 1e-6;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a function inside the unit disk");
    eval_cmd->fallthrough();
    eval_cmd->add_option("--fn", fn, "catalog tag, builtin name, or series file")->required();
    eval_cmd->add_option("--points", points_spec, "semicolon-separated, each 're' or 're,im'")
        ->required();

    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "emit series coefficients");
    coeffs_cmd->fallthrough();
    coeffs_cmd->add_option("--fn", fn, "catalog tag, builtin name, or series file")->required();
    CLI::Option* n_opt = coeffs_cmd->add_option("--n", coeff_index, "single coefficient index");

    CLI::App* memb_cmd = app.add_subcommand("check-membership", "run a class membership check");
    memb_cmd->fallthrough();
    memb_cmd->add_option("--f", f_name, "candidate function")->required();
    memb_cmd->add_option("--g", g_name, "starlike reference (two-function checks)");
    memb_cmd
        ->add_option("--check", check_name,
                     "which membership definition (default: kq with --g, else sq-def)")
        ->check(CLI::IsMember({"sq-def", "sq-ratio", "kq", "kq-lemma", "classical-starlike",
                               "classical-ctc"}));

    CLI::App* crit_cmd = app.add_subcommand("check-criteria", "run a coefficient criterion");
    crit_cmd->fallthrough();
    crit_cmd->add_option("--f", f_name, "candidate function")->required();
    crit_cmd->add_option("--criterion", criterion_name, "which sufficient condition")
        ->required()
        ->check(CLI::IsMember({"sum-halfplane", "monotone-halfplane", "koebe",
                               "odd-lemniscate", "two-step", "hexic"}));
    crit_cmd->add_option("--variant", variant_name, "sum (default) or chain")
        ->check(CLI::IsMember({"sum", "chain"}));

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "tabulate a coefficient bound");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--class", class_tag_name, "bound family")->required();
    bounds_cmd->add_option("--n", range_spec, "index range 'a..b' or 'k' (default 2..order)");
    bounds_cmd->add_option("--eps", eps, "classical-column offset from q = 1")
        ->capture_default_str();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full self-verification suite");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!(cfg.q > 0.0 && cfg.q <= 1.0))
        throw std::invalid_argument("--q must lie in (0, 1]");
    if (cfg.order < 8 || cfg.order > 4096)
        throw std::invalid_argument("--order must lie in [8, 4096]");
    const DiskGrid grid(cfg.radii, cfg.angles);

    if (eval_cmd->parsed()) return cmd_eval(cfg, fn, points_spec);
    if (coeffs_cmd->parsed())
        return cmd_coeffs(cfg, fn,
                          n_opt->count() > 0 ? std::optional<int>(coeff_index) : std::nullopt);
    if (memb_cmd->parsed()) return cmd_check_membership(cfg, grid, f_name, g_name, check_name);
    if (crit_cmd->parsed()) return cmd_check_criteria(cfg, f_name, criterion_name, variant_name);
    if (bounds_cmd->parsed()) return cmd_bounds(cfg, class_tag_name, range_spec, eps);
    return cmd_verify(cfg);
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return run_impl(argc, argv);
    } catch (const DomainViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ComplexCoefficientError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qconvex");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace qconvex::cli
