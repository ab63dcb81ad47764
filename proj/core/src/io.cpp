#include "ivopt/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ivopt {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, const std::string& name, int lineno) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(name + ":" + std::to_string(lineno) + ": bad numeral '" + s + "'");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos != s.size())
        throw ParseError(name + ":" + std::to_string(lineno) + ": bad numeral '" + s + "'");
    return v;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw IoError("write failed: " + path);
}

json interval_json(const Interval& a) {
    return json{{"lo", a.lo()}, {"hi", a.hi()}};
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

IntervalDataset parse_interval_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    return parse_interval_csv(in, path);
}

IntervalDataset parse_interval_csv(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line))
        throw ParseError(name + ": empty file");
    ++lineno;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "x_lo,x_hi,y_lo,y_hi")
        throw ParseError(name + ":1: expected header 'x_lo,x_hi,y_lo,y_hi'");
    IntervalDataset data;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        double v[4];
        for (int i = 0; i < 4; ++i)
            v[i] = parse_number(fields[i], name, lineno);
        try {
            data.rows.push_back({Interval(v[0], v[1]), Interval(v[2], v[3])});
        } catch (const InvalidInterval& e) {
            throw InvalidInterval(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (data.rows.empty())
        throw ParseError(name + ": no data rows");
    return data;
}

std::string format_interval_csv(const IntervalDataset& data) {
    std::string out = "x_lo,x_hi,y_lo,y_hi\n";
    for (const auto& row : data.rows)
        out += format_double(row.x.lo()) + "," + format_double(row.x.hi()) + "," +
               format_double(row.y.lo()) + "," + format_double(row.y.hi()) + "\n";
    return out;
}

void emit_interval_csv(const IntervalDataset& data, const std::string& path) {
    write_file(path, format_interval_csv(data));
}

std::string format_trace_csv(const SolveTrace& trace) {
    const std::size_t n = trace.iterations.front().x.size();
    std::string out = "k";
    for (std::size_t i = 0; i < n; ++i)
        out += ",x" + std::to_string(i);
    out += ",F_lo,F_hi,alpha,grad_norm,nondomination_ok\n";
    for (const auto& it : trace.iterations) {
        out += std::to_string(it.k);
        for (double xi : it.x)
            out += "," + format_double(xi);
        out += "," + format_double(it.fx.lo()) + "," + format_double(it.fx.hi());
        out += "," + format_double(it.alpha);
        out += "," + format_double(vector_norm(it.grad));
        out += it.nondomination_ok ? ",1\n" : ",0\n";
    }
    return out;
}

std::string format_trace_json(const SolveTrace& trace) {
    json j;
    j["status"] = to_string(trace.status);
    j["iterations"] = json::array();
    for (const auto& it : trace.iterations) {
        json grad = json::array();
        for (const auto& g : it.grad)
            grad.push_back(interval_json(g));
        j["iterations"].push_back({{"k", it.k},
                                   {"x", it.x},
                                   {"F", interval_json(it.fx)},
                                   {"grad", grad},
                                   {"direction", it.direction},
                                   {"alpha", it.alpha},
                                   {"grad_norm", vector_norm(it.grad)},
                                   {"nondomination_ok", it.nondomination_ok}});
    }
    j["contraction_ratios"] = trace.contraction_ratios;
    return j.dump(2) + "\n";
}

void emit_trace(const SolveTrace& trace, OutputFormat format, const std::string& path) {
    write_file(path, format == OutputFormat::Csv ? format_trace_csv(trace)
                                                 : format_trace_json(trace));
}

BandRow band_decompose(const Interval& y, const Interval& h) {
    BandRow row{y, h, std::nullopt, {}, {}};
    const double lo = std::max(y.lo(), h.lo());
    const double hi = std::min(y.hi(), h.hi());
    if (lo <= hi) {
        row.overlap = Interval(lo, hi);
        if (y.lo() < lo)
            row.y_excess.emplace_back(y.lo(), lo);
        if (y.hi() > hi)
            row.y_excess.emplace_back(hi, y.hi());
        if (h.lo() < lo)
            row.h_excess.emplace_back(h.lo(), lo);
        if (h.hi() > hi)
            row.h_excess.emplace_back(hi, h.hi());
    } else {
        row.y_excess.push_back(y);
        row.h_excess.push_back(h);
    }
    return row;
}

FitReport make_fit_report(const ModelSpec& m, const IntervalDataset& data, const FitResult& result) {
    FitReport report;
    report.beta_hat = result.beta_hat;
    report.iterations = result.trace.steps();
    report.terminal_error = result.trace.iterations.back().fx;
    for (const auto& row : data.rows)
        report.rows.push_back(band_decompose(row.y, model_eval(m, row.x, result.beta_hat)));
    return report;
}

std::string format_fit_report_csv(const FitReport& report) {
    std::string out =
        "y_lo,y_hi,h_lo,h_hi,overlap_lo,overlap_hi,"
        "y_excess1_lo,y_excess1_hi,y_excess2_lo,y_excess2_hi,"
        "h_excess1_lo,h_excess1_hi,h_excess2_lo,h_excess2_hi\n";
    auto put = [&](const Interval& a) {
        out += "," + format_double(a.lo()) + "," + format_double(a.hi());
    };
    auto put_pieces = [&](const std::vector<Interval>& v) {
        for (const auto& p : v)
            put(p);
        for (std::size_t i = v.size(); i < 2; ++i)
            out += ",,";
    };
    for (const auto& row : report.rows) {
        out += format_double(row.y.lo()) + "," + format_double(row.y.hi());
        put(row.h);
        if (row.overlap)
            put(*row.overlap);
        else
            out += ",,";
        put_pieces(row.y_excess);
        put_pieces(row.h_excess);
        out += "\n";
    }
    return out;
}

std::string format_fit_report_json(const FitReport& report) {
    json j;
    j["beta_hat"] = report.beta_hat;
    j["iterations"] = report.iterations;
    j["terminal_error"] = interval_json(report.terminal_error);
    j["bands"] = json::array();
    for (const auto& row : report.rows) {
        json piece_y = json::array(), piece_h = json::array();
        for (const auto& p : row.y_excess)
            piece_y.push_back(interval_json(p));
        for (const auto& p : row.h_excess)
            piece_h.push_back(interval_json(p));
        j["bands"].push_back({{"y", interval_json(row.y)},
                              {"h", interval_json(row.h)},
                              {"overlap", row.overlap ? interval_json(*row.overlap) : json(nullptr)},
                              {"y_excess", piece_y},
                              {"h_excess", piece_h}});
    }
    return j.dump(2) + "\n";
}

void emit_fit_report(const FitReport& report, OutputFormat format, const std::string& path) {
    write_file(path, format == OutputFormat::Csv ? format_fit_report_csv(report)
                                                 : format_fit_report_json(report));
}

}  // namespace ivopt
