#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ivopt/io.hpp"
#include "ivopt/problems.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ivopt;
using testsupport::random_interval;

TEST_CASE("parse_interval_csv") {
    std::istringstream in(
        "x_lo,x_hi,y_lo,y_hi\n"
        "-1.99,-1.86,1.21,2.60\n"
        "0.02,0.21,0.997,0.999\n"
        "6e-8,1e-2,0.5,5e-1\n");
    const IntervalDataset data = parse_interval_csv(in, "mem");
    REQUIRE(data.size() == 3);
    CHECK(data.rows[0].x == Interval(-1.99, -1.86));
    CHECK(data.rows[0].y == Interval(1.21, 2.60));
    CHECK(data.rows[1].y == Interval(0.997, 0.999));
    CHECK(data.rows[2].x == Interval(6e-8, 1e-2));
    CHECK(data.rows[2].y == Interval(0.5, 0.5));
}

TEST_CASE("parse errors report the offending line") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return parse_interval_csv(in, "mem");
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("a,b,c,d\n0,1,0,1\n"), ParseError);
    CHECK_THROWS_AS(parse("x_lo,x_hi,y_lo,y_hi\n"), ParseError);
    CHECK_THROWS_AS(parse("x_lo,x_hi,y_lo,y_hi\n0,1,2\n"), ParseError);
    CHECK_THROWS_AS(parse("x_lo,x_hi,y_lo,y_hi\n0,one,0,1\n"), ParseError);
    CHECK_THROWS_AS(parse("x_lo,x_hi,y_lo,y_hi\n2,1,0,0\n"), InvalidInterval);
    try {
        parse("x_lo,x_hi,y_lo,y_hi\n0,1,0,1\n2,1,0,0\n");
        FAIL("expected InvalidInterval");
    } catch (const InvalidInterval& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
}

TEST_CASE("dataset round-trip is bitwise stable") {
    std::mt19937 rng(99);
    IntervalDataset data;
    for (int i = 0; i < 200; ++i)
        data.rows.push_back({random_interval(rng, 1e6), random_interval(rng, 1e-3)});
    std::istringstream in(format_interval_csv(data));
    const IntervalDataset back = parse_interval_csv(in, "mem");
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(back.rows[i].x == data.rows[i].x);
        CHECK(back.rows[i].y == data.rows[i].y);
    }
}

TEST_CASE("trace formatting") {
    SolverConfig cfg;
    cfg.x0 = {0.0, 6.0};
    cfg.max_iter = 1;
    const SolveTrace t = solve_w_gradient(example_5_2(), cfg);
    const std::string csv = format_trace_csv(t);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "k,x0,x1,F_lo,F_hi,alpha,grad_norm,nondomination_ok");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 2);  // k=0 initial, k=1 terminal

    const auto j = nlohmann::json::parse(format_trace_json(t));
    CHECK(j["status"] == "MaxIter");
    REQUIRE(j["iterations"].size() == 2);
    CHECK(j["iterations"][0]["k"] == 0);
    CHECK(j["iterations"][0]["x"].size() == 2);
    CHECK(j["iterations"][0]["F"].contains("lo"));
    CHECK(j["iterations"][0].contains("nondomination_ok"));
}

TEST_CASE("band_decompose reconstructs both bands") {
    auto covers = [](const Interval& whole, const std::optional<Interval>& overlap,
                     const std::vector<Interval>& excess) {
        // pieces must tile `whole` exactly
        std::vector<Interval> pieces = excess;
        if (overlap && overlap->lo() >= whole.lo() && overlap->hi() <= whole.hi())
            pieces.push_back(*overlap);
        std::sort(pieces.begin(), pieces.end(),
                  [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
        if (pieces.empty() || pieces.front().lo() != whole.lo() ||
            pieces.back().hi() != whole.hi())
            return false;
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
            if (pieces[i].hi() != pieces[i + 1].lo())
                return false;
        return true;
    };

    std::mt19937 rng(1234);
    for (int t = 0; t < 10000; ++t) {
        const Interval y = random_interval(rng);
        const Interval h = random_interval(rng);
        const BandRow row = band_decompose(y, h);
        CHECK(covers(y, row.overlap, row.y_excess));
        CHECK(covers(h, row.overlap, row.h_excess));
        if (row.overlap) {
            CHECK(row.overlap->lo() == std::max(y.lo(), h.lo()));
            CHECK(row.overlap->hi() == std::min(y.hi(), h.hi()));
        } else {
            CHECK((y.hi() < h.lo() || h.hi() < y.lo()));
        }
    }

    const BandRow nested = band_decompose(Interval(0, 10), Interval(2, 5));
    REQUIRE(nested.overlap.has_value());
    CHECK(*nested.overlap == Interval(2, 5));
    CHECK(nested.y_excess.size() == 2);
    CHECK(nested.h_excess.empty());
    const BandRow disjoint = band_decompose(Interval(0, 1), Interval(2, 3));
    CHECK(!disjoint.overlap.has_value());
    CHECK(disjoint.y_excess.size() == 1);
    CHECK(disjoint.h_excess.size() == 1);
}

TEST_CASE("fit report JSON schema") {
    const ModelSpec m = ModelSpec::polynomial(Interval(1.70, 12.00));
    IntervalDataset data;
    data.rows.push_back({Interval(0, 1), Interval(1, 13)});
    data.rows.push_back({Interval(1, 2), Interval(2, 3)});
    SolverConfig cfg;
    cfg.max_iter = 5;
    const FitResult r = fit(m, data, {1, 0, 0}, WeightPair(0.5), cfg);
    const FitReport report = make_fit_report(m, data, r);
    const auto j = nlohmann::json::parse(format_fit_report_json(report));
    CHECK(j["beta_hat"].size() == 3);
    REQUIRE(j["bands"].size() == 2);
    CHECK(j["bands"][0].contains("y"));
    CHECK(j["bands"][0].contains("h"));
    CHECK(j["bands"][0].contains("overlap"));
    CHECK(j["bands"][0].contains("y_excess"));
    CHECK(j["bands"][0].contains("h_excess"));
    const std::string csv = format_fit_report_csv(report);
    CHECK(csv.rfind("y_lo,y_hi,h_lo,h_hi,overlap_lo,overlap_hi,", 0) == 0);
}

TEST_CASE("unwritable path raises IoError") {
    IntervalDataset data;
    data.rows.push_back({Interval(0, 1), Interval(0, 1)});
    CHECK_THROWS_AS(emit_interval_csv(data, "/nonexistent-dir/out.csv"), IoError);
    SolverConfig cfg;
    cfg.x0 = {1.0};
    cfg.max_iter = 1;
    const SolveTrace t = solve_w_gradient(example_5_1(), cfg);
    try {
        emit_trace(t, OutputFormat::Csv, "/nonexistent-dir/trace.csv");
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/trace.csv") != std::string::npos);
    }
}

TEST_CASE("format_double round-trips doubles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1e9, 1e9);
    for (int t = 0; t < 10000; ++t) {
        const double v = u(rng);
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}
