#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ivopt/io.hpp"
#include "ivopt/problems.hpp"

namespace fs = std::filesystem;
using namespace ivopt;

namespace {

struct SolveArgs {
    std::string problem;
    std::vector<double> weights;
    std::vector<std::string> starts;
    double grad_tol = 1e-6;
    int max_iter = 500;
    std::string out;
    std::string format = "csv";
};

struct FitArgs {
    std::string model;
    std::string data;
    double c_lo = 0.0, c_hi = 0.0;
    std::vector<double> beta0;
    double w = 0.5;
    double grad_tol = 1e-6;
    int max_iter = 500;
    std::string out;
    std::string format = "csv";
};

std::string default_out_dir() {
    const char* env = std::getenv("IVOPT_OUT_DIR");
    return env && *env ? env : ".";
}

Point parse_point(const std::string& s, int dim) {
    Point p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        p.push_back(std::stod(tok));
    if (static_cast<int>(p.size()) != dim)
        throw Error("start point '" + s + "' has " + std::to_string(p.size()) +
                    " coordinates, expected " + std::to_string(dim));
    return p;
}

std::string join_points(const Point& p, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? sep : "") + format_double(p[i]);
    return s;
}

OutputFormat parse_format(const std::string& f) {
    if (f == "csv")
        return OutputFormat::Csv;
    if (f == "json")
        return OutputFormat::Json;
    throw Error("unknown format: " + f);
}

int run_solve(const SolveArgs& args) {
    const OutputFormat fmt = parse_format(args.format);
    const Ivf f = builtin_problem(args.problem);
    const fs::path out_dir = args.out.empty() ? default_out_dir() : args.out;
    fs::create_directories(out_dir);
    if (args.weights.empty() || args.starts.empty())
        throw Error("need at least one --w and one --x0");

    struct Row {
        double w;
        Point x0;
        int iterations;
        Point x;
        SolveStatus status;
    };
    std::vector<Row> rows;
    int run = 0;
    for (double w : args.weights) {
        for (const auto& s : args.starts) {
            SolverConfig cfg;
            cfg.weights = WeightPair(w);
            cfg.x0 = parse_point(s, f.dim);
            cfg.grad_tol = args.grad_tol;
            cfg.max_iter = args.max_iter;
            const SolveTrace trace = solve_w_gradient(f, cfg);
            rows.push_back({w, cfg.x0, trace.steps(), trace.terminal_x(), trace.status});
            const std::string ext = fmt == OutputFormat::Csv ? ".csv" : ".json";
            emit_trace(trace, fmt, (out_dir / ("trace_" + std::to_string(run) + ext)).string());
            ++run;
        }
    }

    bool all_stationary = true;
    if (fmt == OutputFormat::Csv) {
        std::string csv = "w";
        for (int i = 0; i < f.dim; ++i)
            csv += ",x0_" + std::to_string(i);
        csv += ",iterations";
        for (int i = 0; i < f.dim; ++i)
            csv += ",x" + std::to_string(i);
        csv += ",status\n";
        for (const auto& r : rows) {
            csv += format_double(r.w);
            for (double v : r.x0)
                csv += "," + format_double(v);
            csv += "," + std::to_string(r.iterations);
            for (double v : r.x)
                csv += "," + format_double(v);
            csv += "," + to_string(r.status) + "\n";
        }
        std::ofstream(out_dir / "summary.csv") << csv;
    } else {
        std::string j = "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            j += "  {\"w\": " + format_double(r.w) + ", \"x0\": [" + join_points(r.x0, ", ") +
                 "], \"iterations\": " + std::to_string(r.iterations) + ", \"x\": [" +
                 join_points(r.x, ", ") + "], \"status\": \"" + to_string(r.status) + "\"}";
            j += i + 1 < rows.size() ? ",\n" : "\n";
        }
        j += "]\n";
        std::ofstream(out_dir / "summary.json") << j;
    }
    for (const auto& r : rows) {
        std::cout << "w=" << r.w << " x0=(" << join_points(r.x0, ",") << ") -> ("
                  << join_points(r.x, ",") << ") " << to_string(r.status) << " in "
                  << r.iterations << " iterations\n";
        all_stationary = all_stationary && r.status == SolveStatus::Stationary;
    }
    return all_stationary ? 0 : 2;
}

int run_fit(const FitArgs& args) {
    const OutputFormat fmt = parse_format(args.format);
    ModelSpec m = args.model == "poly" ? ModelSpec::polynomial(Interval(args.c_lo, args.c_hi))
                                       : ModelSpec::logistic(Interval(args.c_lo, args.c_hi));
    const IntervalDataset data = parse_interval_csv(args.data);
    SolverConfig cfg;
    cfg.grad_tol = args.grad_tol;
    cfg.max_iter = args.max_iter;
    const FitResult result = fit(m, data, args.beta0, WeightPair(args.w), cfg);
    const FitReport report = make_fit_report(m, data, result);

    const fs::path out_dir = args.out.empty() ? default_out_dir() : args.out;
    fs::create_directories(out_dir);
    emit_fit_report(report, OutputFormat::Json, (out_dir / "fit_report.json").string());
    emit_fit_report(report, OutputFormat::Csv, (out_dir / "fit_bands.csv").string());
    emit_trace(result.trace, fmt,
               (out_dir / (fmt == OutputFormat::Csv ? "fit_trace.csv" : "fit_trace.json")).string());

    std::cout << "beta_hat = (" << join_points(result.beta_hat, ", ") << ")\n"
              << "iterations = " << report.iterations << "\n"
              << "status = " << to_string(result.trace.status) << "\n"
              << "error = " << to_string(report.terminal_error, 10) << "\n";
    return result.trace.status == SolveStatus::Stationary ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gH-interval calculus and efficient-direction optimization"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto add_solve = [&](CLI::App* cmd) {
        cmd->add_option("--problem", sa.problem, "builtin problem name (example-5.1, example-5.2)")
            ->required();
        cmd->add_option("--w", sa.weights, "weight values in [0,1]")->delimiter(',')->required();
        cmd->add_option("--x0", sa.starts, "start points, comma-separated coordinates")->required();
        cmd->add_option("--grad-tol", sa.grad_tol, "stationarity tolerance");
        cmd->add_option("--max-iter", sa.max_iter, "iteration cap");
        cmd->add_option("--out", sa.out, "output directory (default $IVOPT_OUT_DIR or .)");
        cmd->add_option("--format", sa.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    add_solve(app.add_subcommand("solve", "run the W-gH-gradient method on a builtin problem"));
    add_solve(app.add_subcommand("sweep", "alias of solve for (w, x0) grids"));

    FitArgs fa;
    CLI::App* fit_cmd = app.add_subcommand("fit", "interval least-squares fit");
    fit_cmd->add_option("--model", fa.model, "poly or logistic")
        ->check(CLI::IsMember({"poly", "logistic"}))
        ->required();
    fit_cmd->add_option("--data", fa.data, "interval CSV (header x_lo,x_hi,y_lo,y_hi)")->required();
    fit_cmd->add_option("--c-lo", fa.c_lo, "constant interval C lower endpoint")->required();
    fit_cmd->add_option("--c-hi", fa.c_hi, "constant interval C upper endpoint")->required();
    fit_cmd->add_option("--beta0", fa.beta0, "initial parameters")->delimiter(',')->required();
    fit_cmd->add_option("--w", fa.w, "scalarization weight")->required();
    fit_cmd->add_option("--grad-tol", fa.grad_tol, "stationarity tolerance");
    fit_cmd->add_option("--max-iter", fa.max_iter, "iteration cap");
    fit_cmd->add_option("--out", fa.out, "output directory (default $IVOPT_OUT_DIR or .)");
    fit_cmd->add_option("--format", fa.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("fit"))
            return run_fit(fa);
        return run_solve(sa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
