#include "ivopt/least_squares.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ivopt {

namespace {

constexpr double kExpClamp = 700.0;

double clamped_exp(double v) { return std::exp(std::clamp(v, -kExpClamp, kExpClamp)); }

Interval exp_clamped(const Interval& a) {
    return Interval(clamped_exp(a.lo()), clamped_exp(a.hi()));
}

// Interval value carrying forward tangents of each endpoint wrt beta.
struct TIv {
    double lo = 0.0, hi = 0.0;
    std::array<double, 3> dlo{}, dhi{};
};

TIv tconst(const Interval& a) {
    TIv t;
    t.lo = a.lo();
    t.hi = a.hi();
    return t;
}

// bval * A for a constant interval A; tangent only in coordinate i.
TIv tparam_scale(double bval, std::size_t i, const Interval& a) {
    TIv t;
    if (bval >= 0.0) {
        t.lo = bval * a.lo();
        t.hi = bval * a.hi();
        t.dlo[i] = a.lo();
        t.dhi[i] = a.hi();
    } else {
        t.lo = bval * a.hi();
        t.hi = bval * a.lo();
        t.dlo[i] = a.hi();
        t.dhi[i] = a.lo();
    }
    return t;
}

TIv tadd(const TIv& a, const TIv& b, int l) {
    TIv t;
    t.lo = a.lo + b.lo;
    t.hi = a.hi + b.hi;
    for (int i = 0; i < l; ++i) {
        t.dlo[i] = a.dlo[i] + b.dlo[i];
        t.dhi[i] = a.dhi[i] + b.dhi[i];
    }
    return t;
}

TIv tneg(const TIv& a, int l) {
    TIv t;
    t.lo = -a.hi;
    t.hi = -a.lo;
    for (int i = 0; i < l; ++i) {
        t.dlo[i] = -a.dhi[i];
        t.dhi[i] = -a.dlo[i];
    }
    return t;
}

TIv tghdiff_const(const TIv& a, const Interval& y, int l) {
    const double d1 = a.lo - y.lo();
    const double d2 = a.hi - y.hi();
    TIv t;
    if (d1 <= d2) {
        t.lo = d1;
        t.hi = d2;
        t.dlo = a.dlo;
        t.dhi = a.dhi;
    } else {
        t.lo = d2;
        t.hi = d1;
        t.dlo = a.dhi;
        t.dhi = a.dlo;
    }
    (void)l;
    return t;
}

TIv tmul(const TIv& a, const TIv& b, int l) {
    const double av[2] = {a.lo, a.hi};
    const double bv[2] = {b.lo, b.hi};
    const std::array<double, 3>* ad[2] = {&a.dlo, &a.dhi};
    const std::array<double, 3>* bd[2] = {&b.dlo, &b.dhi};
    int imin = 0, jmin = 0, imax = 0, jmax = 0;
    double vmin = av[0] * bv[0], vmax = vmin;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double p = av[i] * bv[j];
            if (p < vmin) {
                vmin = p;
                imin = i;
                jmin = j;
            }
            if (p >= vmax) {
                vmax = p;
                imax = i;
                jmax = j;
            }
        }
    TIv t;
    t.lo = vmin;
    t.hi = vmax;
    for (int k = 0; k < l; ++k) {
        t.dlo[k] = (*ad[imin])[k] * bv[jmin] + av[imin] * (*bd[jmin])[k];
        t.dhi[k] = (*ad[imax])[k] * bv[jmax] + av[imax] * (*bd[jmax])[k];
    }
    return t;
}

TIv texp(const TIv& a, int l) {
    TIv t;
    t.lo = clamped_exp(a.lo);
    t.hi = clamped_exp(a.hi);
    for (int i = 0; i < l; ++i) {
        t.dlo[i] = std::fabs(a.lo) < kExpClamp ? t.lo * a.dlo[i] : 0.0;
        t.dhi[i] = std::fabs(a.hi) < kExpClamp ? t.hi * a.dhi[i] : 0.0;
    }
    return t;
}

// 1 / a for a.lo > 0.
TIv trecip(const TIv& a, int l) {
    TIv t;
    t.lo = 1.0 / a.hi;
    t.hi = 1.0 / a.lo;
    for (int i = 0; i < l; ++i) {
        t.dlo[i] = -a.dhi[i] / (a.hi * a.hi);
        t.dhi[i] = -a.dlo[i] / (a.lo * a.lo);
    }
    return t;
}

TIv model_tangent(const ModelSpec& m, const Interval& x, const std::vector<double>& beta) {
    const int l = m.param_dim;
    if (m.kind == ModelKind::Polynomial) {
        const Interval x2 = mul(x, x);
        return tadd(tadd(tparam_scale(beta[0], 0, m.c), tparam_scale(beta[1], 1, x), l),
                    tparam_scale(beta[2], 2, x2), l);
    }
    const TIv s = tadd(tparam_scale(beta[0], 0, m.c), tparam_scale(beta[1], 1, x), l);
    const TIv den = tadd(tconst(Interval::point(1.0)), texp(tneg(s, l), l), l);
    return trecip(den, l);
}

TIv error_tangent(const ModelSpec& m, const IntervalDataset& data, const std::vector<double>& beta) {
    const int l = m.param_dim;
    TIv tot;
    for (const auto& row : data.rows) {
        const TIv r = tghdiff_const(model_tangent(m, row.x, beta), row.y, l);
        tot = tadd(tot, tmul(r, r, l), l);
    }
    return tot;
}

void check_beta(const ModelSpec& m, const std::vector<double>& beta) {
    if (static_cast<int>(beta.size()) != m.param_dim)
        throw LengthMismatch("beta length " + std::to_string(beta.size()) + " vs model dim " +
                             std::to_string(m.param_dim));
}

}  // namespace

Interval model_eval(const ModelSpec& m, const Interval& x, const std::vector<double>& beta) {
    check_beta(m, beta);
    if (m.kind == ModelKind::Polynomial)
        return add(add(scalar_mul(beta[0], m.c), scalar_mul(beta[1], x)),
                   scalar_mul(beta[2], mul(x, x)));
    const Interval s = add(scalar_mul(beta[0], m.c), scalar_mul(beta[1], x));
    const Interval den = add(Interval::point(1.0), exp_clamped(scalar_mul(-1.0, s)));
    return div(Interval::point(1.0), den);
}

Interval model_partial(const ModelSpec& m, const Interval& x, const std::vector<double>& beta,
                       std::size_t i) {
    check_beta(m, beta);
    if (i >= static_cast<std::size_t>(m.param_dim))
        throw LengthMismatch("parameter index out of range");
    if (m.kind == ModelKind::Polynomial) {
        if (i == 0)
            return m.c;
        if (i == 1)
            return x;
        return mul(x, x);
    }
    const Interval s = add(scalar_mul(beta[0], m.c), scalar_mul(beta[1], x));
    const Interval den = add(Interval::point(1.0), exp_clamped(scalar_mul(-1.0, s)));
    const Interval f = div(Interval::point(1.0), mul(den, den));
    return mul(f, i == 0 ? m.c : x);
}

Interval error_eval(const ModelSpec& m, const IntervalDataset& data,
                    const std::vector<double>& beta) {
    check_beta(m, beta);
    Interval acc = Interval::point(0.0);
    for (const auto& row : data.rows) {
        const Interval r = gh_difference(model_eval(m, row.x, beta), row.y);
        acc = add(acc, mul(r, r));
    }
    return acc;
}

IntervalVector error_gradient(const ModelSpec& m, const IntervalDataset& data,
                              const std::vector<double>& beta) {
    check_beta(m, beta);
    const TIv t = error_tangent(m, data, beta);
    std::vector<Interval> out;
    for (int i = 0; i < m.param_dim; ++i)
        out.emplace_back(std::min(t.dlo[i], t.dhi[i]), std::max(t.dlo[i], t.dhi[i]));
    return IntervalVector(std::move(out));
}

IntervalVector error_gradient_envelope(const ModelSpec& m, const IntervalDataset& data,
                                       const std::vector<double>& beta) {
    check_beta(m, beta);
    std::vector<Interval> out(m.param_dim, Interval::point(0.0));
    for (const auto& row : data.rows) {
        const Interval r = gh_difference(model_eval(m, row.x, beta), row.y);
        for (int i = 0; i < m.param_dim; ++i)
            out[i] = add(out[i], scalar_mul(2.0, mul(r, model_partial(m, row.x, beta, i))));
    }
    return IntervalVector(std::move(out));
}

std::vector<double> error_gradient_scalarized(const ModelSpec& m, const IntervalDataset& data,
                                              const std::vector<double>& beta,
                                              const WeightPair& wp) {
    check_beta(m, beta);
    const TIv t = error_tangent(m, data, beta);
    std::vector<double> out(m.param_dim);
    for (int i = 0; i < m.param_dim; ++i)
        out[i] = wp.w * t.dlo[i] + wp.w_prime * t.dhi[i];
    return out;
}

Ivf error_ivf(const ModelSpec& m, const IntervalDataset& data) {
    Ivf f;
    f.dim = m.param_dim;
    f.eval = [m, data](const Point& beta) { return error_eval(m, data, beta); };
    f.gradient = [m, data](const Point& beta) { return error_gradient(m, data, beta); };
    return f;
}

FitResult fit(const ModelSpec& m, const IntervalDataset& data, const std::vector<double>& beta0,
              const WeightPair& wp, SolverConfig cfg) {
    check_beta(m, beta0);
    if (data.rows.empty())
        throw ParseError("empty dataset");
    cfg.weights = wp;
    cfg.x0 = beta0;
    const Ivf f = error_ivf(m, data);
    DirectionOracle oracle = [m, data, wp, &cfg](const Point& beta, const IntervalVector& g) {
        std::vector<double> d = error_gradient_scalarized(m, data, beta, wp);
        bool all_zero = true;
        for (double& v : d) {
            v = -v;
            all_zero = all_zero && v == 0.0;
        }
        if (all_zero && !is_stationary(g, cfg.grad_tol)) {
            const WeightPair wp2(std::min(1.0, wp.w + 1e-3));
            d = error_gradient_scalarized(m, data, beta, wp2);
            for (double& v : d)
                v = -v;
        }
        return d;
    };
    SolveTrace trace = solve_general(f, oracle, cfg);
    return {trace.terminal_x(), std::move(trace)};
}

}  // namespace ivopt
