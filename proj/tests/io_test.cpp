#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qconvex/io.hpp"
#include "qconvex/qspecial.hpp"

using namespace qconvex;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const char* stem) {
    return std::filesystem::temp_directory_path() / stem;
}

struct FileGuard {
    std::filesystem::path p;
    ~FileGuard() { std::filesystem::remove(p); }
};

}  // namespace

TEST_CASE("series JSON shape and in-memory round trip") {
    const TruncatedSeries f = kq_series(QParam(0.5), 32);
    const json j = series_to_json(f, "sample");
    CHECK(j["name"] == "sample");
    CHECK(j["order"] == 32);
    REQUIRE(j["coeffs"].is_array());
    REQUIRE(j["coeffs"].size() == 33);
    CHECK(j["coeffs"][2][0].get<double>() == f[2].real());
    CHECK(j["coeffs"][2][1].get<double>() == 0.0);

    const NamedSeries back = series_from_json(j);
    CHECK(back.name == "sample");
    REQUIRE(back.series.order() == 32);
    for (int n = 0; n <= 32; ++n) CHECK(back.series[n] == f[n]);

    // serialization text survives a parse cycle bit for bit
    const NamedSeries reparsed = series_from_json(json::parse(j.dump()));
    for (int n = 0; n <= 32; ++n) CHECK(reparsed.series[n] == f[n]);
}

TEST_CASE("series file round trip") {
    const FileGuard tmp{temp_file("roundtrip_series.json")};
    const TruncatedSeries f = kq_series(QParam(0.7), 24);
    write_series_file(tmp.p.string(), f, "extremal");
    const NamedSeries back = read_series_file(tmp.p.string());
    CHECK(back.name == "extremal");
    REQUIRE(back.series.order() == 24);
    for (int n = 0; n <= 24; ++n) CHECK(back.series[n] == f[n]);
}

TEST_CASE("series JSON validation") {
    CHECK_THROWS_WITH_AS(series_from_json(json::array()), "series: expected {name, order, coeffs}",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(series_from_json(json{{"name", "x"}, {"order", 1}}),
                         "series: expected {name, order, coeffs}", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(json{{"name", 7}, {"order", 1}, {"coeffs", json::array()}}),
        "series: wrong field types", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(json{{"name", "x"}, {"order", 1.5}, {"coeffs", json::array()}}),
        "series: wrong field types", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(json{{"name", "x"}, {"order", 2}, {"coeffs", {{0.0, 0.0}, {1.0, 0.0}}}}),
        "series: coeffs must hold exactly order + 1 pairs", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(json{{"name", "x"}, {"order", -1}, {"coeffs", json::array()}}),
        "series: coeffs must hold exactly order + 1 pairs", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(
            json{{"name", "x"}, {"order", 1}, {"coeffs", {{0.0, 0.0}, {1.0, 0.0, 2.0}}}}),
        "series: each coefficient must be a [re, im] pair", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        series_from_json(json{{"name", "x"}, {"order", 1}, {"coeffs", {{0.0, 0.0}, "one"}}}),
        "series: each coefficient must be a [re, im] pair", std::runtime_error);
}

TEST_CASE("series file errors") {
    CHECK_THROWS_AS(read_series_file("/nonexistent/path/series.json"), std::runtime_error);
    try {
        read_series_file("/nonexistent/path/series.json");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).rfind("cannot open series file: ", 0) == 0);
    }

    const FileGuard tmp{temp_file("broken_series.json")};
    {
        std::ofstream out(tmp.p);
        out << "{ not json";
    }
    try {
        read_series_file(tmp.p.string());
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).rfind("invalid JSON in ", 0) == 0);
    }
}

TEST_CASE("real coefficient extraction and its guard") {
    std::vector<Complex> ok{{0.0, 0.0}, {1.0, 1e-15}, {2.5, -1e-14}};
    const std::vector<double> a = real_coefficients(TruncatedSeries(ok));
    REQUIRE(a.size() == 3);
    CHECK(a[1] == 1.0);
    CHECK(a[2] == 2.5);

    std::vector<Complex> bad{{0.0, 0.0}, {1.0, 2e-14}};
    CHECK_THROWS_AS(real_coefficients(TruncatedSeries(bad)), ComplexCoefficientError);
    // the specific error is still a runtime_error for generic handlers
    CHECK_THROWS_AS(real_coefficients(TruncatedSeries(bad)), std::runtime_error);
}

TEST_CASE("verdict serialization") {
    const QParam q(0.5);
    std::vector<Complex> idc{0.0, 1.0};
    const TruncatedSeries id{idc};
    const Verdict v = check_sq_star_def(id, q);
    const json j = verdict_to_json(v, default_disk_grid());
    CHECK(j["holds"] == true);
    CHECK(j["worst_margin"].get<double>() == v.worst_margin);
    CHECK(j["witness"].size() == 2);
    CHECK(j["tail_note"].get<double>() == v.tail_note);
    CHECK(j["inconclusive_points"] == 0);
    CHECK_FALSE(j.contains("first_inconclusive"));
    CHECK(j["config"]["radii"] == json(std::vector<double>{0.5, 0.8, 0.95}));
    CHECK(j["config"]["angles"] == 720);
    CHECK(j["config"]["tol"].get<double>() == v.tol);

    // an inconclusive sample surfaces its location
    std::vector<Complex> c2{0.0, 1.0, 2.0};
    CheckConfig cfg;
    cfg.tol = 1e-9;
    const Verdict bad = check_sq_star_def(TruncatedSeries{c2}, q, cfg);
    const json jb = verdict_to_json(bad, default_disk_grid());
    CHECK(jb["holds"] == false);
    CHECK(jb["inconclusive_points"] == 1);
    REQUIRE(jb.contains("first_inconclusive"));
    CHECK(jb["first_inconclusive"][0].get<double>() == bad.first_inconclusive.real());
}

TEST_CASE("criterion serialization") {
    const QParam q(0.5);
    const std::vector<double> good = real_coefficients(quantum_dilog_scaled(q, 64));
    const json j = criterion_to_json(crit_sum_halfplane(good, q));
    CHECK(j["satisfied"] == true);
    CHECK(j["budget"] == 1.0);
    CHECK(j["certifies"] == "cayley_plus");
    CHECK(j["first_violation"].is_null());
    CHECK(j["statistic"].is_number());
    CHECK(j["converged"].is_boolean());
    CHECK(j["last_increment"].is_number());

    std::vector<double> linear(16, 0.0);
    for (size_t n = 1; n < linear.size(); ++n) linear[n] = static_cast<double>(n);
    linear[1] = 1.0;
    const json jb = criterion_to_json(crit_sum_halfplane(linear, q));
    CHECK(jb["satisfied"] == false);
    CHECK(jb["first_violation"] == 2);
}

TEST_CASE("bound table serialization") {
    const BoundTable t = make_bound_table(BoundClass::kq_cayley, QParam(0.5), 2, 5);
    const json j = bound_table_to_json(t);
    CHECK(j["class"] == "kq_cayley");
    CHECK(j["q"] == 0.5);
    CHECK(j["epsilon"].get<double>() == 1e-6);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["n"] == 2);
    CHECK(j["rows"][0]["value"].get<double>() == t.values[0]);
    CHECK(j["rows"][3]["n"] == 5);
    CHECK(j["rows"][3]["classical_limit"].get<double>() == t.classical_limit[3]);
}
