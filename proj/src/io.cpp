#include "qconvex/io.hpp"

#include <cmath>
#include <fstream>

namespace qconvex {

using nlohmann::json;

json series_to_json(const TruncatedSeries& f, const std::string& name) {
    json coeffs = json::array();
    for (const Complex& a : f.coeffs()) coeffs.push_back({a.real(), a.imag()});
    return json{{"name", name}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

NamedSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("order") || !j.contains("coeffs"))
        throw std::runtime_error("series: expected {name, order, coeffs}");
    if (!j["name"].is_string() || !j["order"].is_number_integer() || !j["coeffs"].is_array())
        throw std::runtime_error("series: wrong field types");
    const long long order = j["order"].get<long long>();
    const auto& arr = j["coeffs"];
    if (order < 0 || arr.size() != static_cast<size_t>(order) + 1)
        throw std::runtime_error("series: coeffs must hold exactly order + 1 pairs");
    std::vector<Complex> c;
    c.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::runtime_error("series: each coefficient must be a [re, im] pair");
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return {j["name"].get<std::string>(), TruncatedSeries(std::move(c))};
}

NamedSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open series file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return series_from_json(j);
}

void write_series_file(const std::string& path, const TruncatedSeries& f, const std::string& name) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write series file: " + path);
    out << series_to_json(f, name).dump(2) << '\n';
}

std::vector<double> real_coefficients(const TruncatedSeries& f) {
    std::vector<double> a;
    a.reserve(f.coeffs().size());
    for (const Complex& c : f.coeffs()) {
        if (std::abs(c.imag()) > 1e-14)
            throw ComplexCoefficientError("coefficient sequence must be real (|imag| <= 1e-14)");
        a.push_back(c.real());
    }
    return a;
}

json verdict_to_json(const Verdict& v, const DiskGrid& grid) {
    json j{{"holds", v.holds},
           {"worst_margin", v.worst_margin},
           {"witness", {v.witness.real(), v.witness.imag()}},
           {"tail_note", v.tail_note},
           {"inconclusive_points", v.inconclusive_points},
           {"config", {{"radii", grid.radii}, {"angles", grid.angles_per_circle}, {"tol", v.tol}}}};
    if (v.inconclusive_points > 0)
        j["first_inconclusive"] = {v.first_inconclusive.real(), v.first_inconclusive.imag()};
    return j;
}

json criterion_to_json(const CriterionResult& r) {
    json j{{"satisfied", r.satisfied},
           {"statistic", r.statistic},
           {"budget", r.budget},
           {"certifies", catalog_tag(r.certifies)},
           {"converged", r.converged},
           {"last_increment", r.last_increment}};
    if (r.first_violation)
        j["first_violation"] = *r.first_violation;
    else
        j["first_violation"] = nullptr;
    return j;
}

json bound_table_to_json(const BoundTable& t) {
    json rows = json::array();
    for (size_t i = 0; i < t.values.size(); ++i)
        rows.push_back({{"n", t.n_lo + static_cast<int>(i)},
                        {"value", t.values[i]},
                        {"classical_limit", t.classical_limit[i]}});
    return json{{"class", bound_class_tag(t.class_tag)},
                {"q", t.q},
                {"epsilon", t.eps},
                {"rows", std::move(rows)}};
}

}  // namespace qconvex
