#include "ivopt/solver.hpp"

#include <algorithm>
#include <cmath>

namespace ivopt {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

double norm_inf(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s = std::max(s, std::fabs(x));
    return s;
}

Point step_point(const Point& x, const std::vector<double>& d, double alpha) {
    Point y = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += alpha * d[i];
    return y;
}

double golden_min(const std::function<double(double)>& phi, double b_hi, double tol, int max_iter) {
    static const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = b_hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = phi(c), fd = phi(d);
    for (int it = 0; it < max_iter && b - a > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = phi(d);
        }
    }
    return 0.5 * (a + b);
}

SolveTrace& finish(SolveTrace& trace, const Point* x_ref) {
    if (x_ref) {
        auto dist = [&](const Point& p) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i)
                s += (p[i] - (*x_ref)[i]) * (p[i] - (*x_ref)[i]);
            return std::sqrt(s);
        };
        for (std::size_t i = 0; i + 1 < trace.iterations.size(); ++i) {
            const double da = dist(trace.iterations[i].x);
            if (da > 0.0)
                trace.contraction_ratios.push_back(dist(trace.iterations[i + 1].x) / da);
        }
    }
    return trace;
}

void validate_config(const Ivf& f, const SolverConfig& cfg) {
    if (f.dim < 1 || !f.eval)
        throw Error("objective has no dimension or eval closure");
    if (static_cast<int>(cfg.x0.size()) != f.dim)
        throw LengthMismatch("x0 length " + std::to_string(cfg.x0.size()) + " vs dim " +
                             std::to_string(f.dim));
    if (cfg.grad_tol <= 0 || cfg.step_tol <= 0 || cfg.dir_tol <= 0 || cfg.max_iter < 1 ||
        cfg.line_search.max_alpha <= 0 || cfg.line_search.ls_tol <= 0)
        throw Error("solver tolerances must be positive");
    if (!f.in_box(cfg.x0))
        throw DomainViolation("x0 outside the domain box");
}

}  // namespace

double clip_alpha_to_box(const Point& x, const std::vector<double>& d, const Box& box,
                         double alpha_max) {
    double a = alpha_max;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (d[i] > 0.0)
            a = std::min(a, (box[i][1] - x[i]) / d[i]);
        else if (d[i] < 0.0)
            a = std::min(a, (box[i][0] - x[i]) / d[i]);
    }
    return std::max(a, 0.0);
}

double line_search_argeff(const Ivf& f, const Point& x, const std::vector<double>& d,
                          const WeightPair& wp, const SolverConfig& cfg) {
    const double n2 = norm2(d);
    if (n2 == 0.0)
        throw ZeroDirection("zero search direction");
    double a_max = cfg.line_search.max_alpha / n2;
    if (f.domain_box)
        a_max = clip_alpha_to_box(x, d, *f.domain_box, a_max);
    if (a_max <= 0.0)
        throw DegenerateBracket("direction leaves the box immediately");
    auto phi = [&](double alpha) {
        const Interval v = f.eval(step_point(x, d, alpha));
        return wp.w * v.lo() + wp.w_prime * v.hi();
    };
    return golden_min(phi, a_max, cfg.line_search.ls_tol / n2, cfg.line_search.max_ls_iter);
}

SolveTrace solve_general(const Ivf& f, const DirectionOracle& oracle, const SolverConfig& cfg,
                         const Point* x_ref) {
    validate_config(f, cfg);
    const WeightPair& wp = cfg.weights;
    const double fd_h = cfg.fd_step.value_or(0.0);
    Point x = cfg.x0;
    SolveTrace trace;

    auto scal = [&](const Point& p) {
        const Interval v = f.eval(p);
        return wp.w * v.lo() + wp.w_prime * v.hi();
    };
    auto record = [&](int k, const Point& p, const Interval& fx, const IntervalVector& g,
                      std::vector<double> dir, double alpha, bool nondom) {
        trace.iterations.push_back({k, p, fx, g, std::move(dir), alpha, nondom});
    };

    int k = 0;
    for (; k < cfg.max_iter; ++k) {
        const IntervalVector g = gh_gradient(f, x, fd_h);
        const IntervalVector gs = gh_gradient_numeric(f, x, fd_h, true);
        const Interval fx = f.eval(x);
        const double fw = wp.w * fx.lo() + wp.w_prime * fx.hi();
        const bool stat = is_stationary(g, cfg.grad_tol) || is_stationary(gs, cfg.grad_tol);

        std::vector<double> d = oracle(x, g);
        if (static_cast<int>(d.size()) != f.dim)
            throw OracleContractViolation("direction length mismatch");
        for (double v : d)
            if (!std::isfinite(v))
                throw OracleContractViolation("non-finite direction");

        if (stat && norm_inf(d) <= cfg.dir_tol * std::max(1.0, std::fabs(fw))) {
            record(k, x, fx, g, d, 0.0, true);
            trace.status = SolveStatus::Stationary;
            break;
        }

        if (!is_efficient_direction_candidate(d, g))
            throw OracleContractViolation("0 dominates d' * grad F at iteration " + std::to_string(k));

        bool stepped = false;
        const double n2 = norm2(d);
        if (n2 > 0.0) {
            double alpha = 0.0;
            try {
                alpha = line_search_argeff(f, x, d, wp, cfg);
            } catch (const DegenerateBracket&) {
                alpha = 0.0;  // boundary point moving outward; fall through to probes
            }
            if (stat && alpha * n2 <= cfg.stat_step_tol) {
                // Already stationary and the exact line search cannot move
                // meaningfully (kink zigzag); stop rather than crawl.
                record(k, x, fx, g, d, 0.0, true);
                trace.status = SolveStatus::Stationary;
                return finish(trace, x_ref);
            }
            if (alpha * n2 > cfg.step_tol) {
                const Point xn = step_point(x, d, alpha);
                if (scal(xn) < fw) {
                    for (double v : xn)
                        if (!std::isfinite(v))
                            throw NonFiniteIterate("iterate left representable range");
                    record(k, x, fx, g, d, alpha, !strictly_dominates(fx, f.eval(xn)));
                    x = xn;
                    stepped = true;
                }
            }
        }
        if (stepped)
            continue;

        // Line search stalled: probe coordinate directions whose smoothed
        // gradient component excludes zero.
        bool probed = false;
        for (int i = 0; i < f.dim && !probed; ++i) {
            if (gs[i].lo() <= cfg.grad_tol && gs[i].hi() >= -cfg.grad_tol)
                continue;
            std::vector<double> e(f.dim, 0.0);
            e[i] = gs[i].lo() > cfg.grad_tol ? -1.0 : 1.0;
            if (!is_efficient_direction_candidate(e, g))
                continue;
            double alpha = 0.0;
            try {
                alpha = line_search_argeff(f, x, e, wp, cfg);
            } catch (const DegenerateBracket&) {
                continue;
            }
            if (alpha > cfg.step_tol) {
                const Point xn = step_point(x, e, alpha);
                if (scal(xn) < fw) {
                    record(k, x, fx, g, e, alpha, !strictly_dominates(fx, f.eval(xn)));
                    x = xn;
                    probed = true;
                }
            }
        }
        if (probed)
            continue;

        record(k, x, fx, g, d, 0.0, true);
        trace.status = stat ? SolveStatus::Stationary : SolveStatus::StepBelowTol;
        break;
    }

    if (k == cfg.max_iter) {
        const IntervalVector g = gh_gradient(f, x, fd_h);
        record(k, x, f.eval(x), g, std::vector<double>(f.dim, 0.0), 0.0, true);
        trace.status = SolveStatus::MaxIter;
    }

    return finish(trace, x_ref);
}

DirectionOracle w_gradient_oracle(const SolverConfig& cfg) {
    return [cfg](const Point&, const IntervalVector& g) {
        std::vector<double> d = w_map(g, cfg.weights);
        for (double& v : d)
            v = -v;
        if (norm_inf(d) == 0.0 && !is_stationary(g, cfg.grad_tol)) {
            // W-kernel tie-break: nudge the weight for this step only.
            const WeightPair wp2(std::min(1.0, cfg.weights.w + 1e-3));
            d = w_map(g, wp2);
            for (double& v : d)
                v = -v;
        }
        return d;
    };
}

SolveTrace solve_w_gradient(const Ivf& f, const SolverConfig& cfg, const Point* x_ref) {
    return solve_general(f, w_gradient_oracle(cfg), cfg, x_ref);
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Stationary: return "Stationary";
        case SolveStatus::StepBelowTol: return "StepBelowTol";
        case SolveStatus::MaxIter: return "MaxIter";
    }
    return "?";
}

}  // namespace ivopt
