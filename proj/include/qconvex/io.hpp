#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qconvex/bounds.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/membership.hpp"
#include "qconvex/series.hpp"

namespace qconvex {

struct NamedSeries {
    std::string name;
    TruncatedSeries series;
};

// Interchange format:
//   {"name": "...", "order": N, "coeffs": [[re, im], ...]}
// with exactly N + 1 coefficient pairs.
nlohmann::json series_to_json(const TruncatedSeries& f, const std::string& name);
NamedSeries series_from_json(const nlohmann::json& j);

NamedSeries read_series_file(const std::string& path);
void write_series_file(const std::string& path, const TruncatedSeries& f, const std::string& name);

// Raised when a coefficient sequence that must be real carries an
// imaginary part above 1e-14.
struct ComplexCoefficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> real_coefficients(const TruncatedSeries& f);

nlohmann::json verdict_to_json(const Verdict& v, const DiskGrid& grid);
nlohmann::json criterion_to_json(const CriterionResult& r);
nlohmann::json bound_table_to_json(const BoundTable& t);

}  // namespace qconvex
