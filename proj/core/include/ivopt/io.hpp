#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ivopt/least_squares.hpp"

namespace ivopt {

enum class OutputFormat { Csv, Json };

// Header `x_lo,x_hi,y_lo,y_hi`; scientific notation accepted.
IntervalDataset parse_interval_csv(const std::string& path);
IntervalDataset parse_interval_csv(std::istream& in, const std::string& name);

// 17 significant digits; parse(emit(data)) is bitwise stable.
void emit_interval_csv(const IntervalDataset& data, const std::string& path);
std::string format_interval_csv(const IntervalDataset& data);

// CSV columns: k,x0..,F_lo,F_hi,alpha,grad_norm,nondomination_ok.
void emit_trace(const SolveTrace& trace, OutputFormat format, const std::string& path);
std::string format_trace_csv(const SolveTrace& trace);
std::string format_trace_json(const SolveTrace& trace);

// Set decomposition of a data band Y against the fitted band H: the common
// part plus the pieces belonging to only one of the two.
struct BandRow {
    Interval y;
    Interval h;
    std::optional<Interval> overlap;
    std::vector<Interval> y_excess;
    std::vector<Interval> h_excess;
};

BandRow band_decompose(const Interval& y, const Interval& h);

struct FitReport {
    std::vector<double> beta_hat;
    int iterations = 0;
    Interval terminal_error;
    std::vector<BandRow> rows;
};

FitReport make_fit_report(const ModelSpec& m, const IntervalDataset& data, const FitResult& result);

void emit_fit_report(const FitReport& report, OutputFormat format, const std::string& path);
std::string format_fit_report_csv(const FitReport& report);
std::string format_fit_report_json(const FitReport& report);

std::string format_double(double v);  // %.17g

}  // namespace ivopt
