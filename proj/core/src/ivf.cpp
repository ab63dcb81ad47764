#include "ivopt/ivf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ivopt {

bool Ivf::in_box(const Point& x) const {
    if (!domain_box)
        return true;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < (*domain_box)[i][0] || x[i] > (*domain_box)[i][1])
            return false;
    return true;
}

double default_fd_step(double xi) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(1.0, std::fabs(xi));
}

static Interval fd_partial(const Ivf& f, const Point& x, std::size_t i, double h, bool clip) {
    Point xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    if (f.domain_box) {
        const auto& b = (*f.domain_box)[i];
        if (clip) {
            xp[i] = std::min(xp[i], b[1]);
            xm[i] = std::max(xm[i], b[0]);
        } else if (xp[i] > b[1] || xm[i] < b[0]) {
            throw DomainViolation("finite-difference stencil leaves the domain box at coordinate " +
                                  std::to_string(i));
        }
    }
    const double dd = xp[i] - xm[i];
    if (dd <= 0.0)
        throw DomainViolation("degenerate finite-difference stencil at coordinate " + std::to_string(i));
    const Interval fp = f.eval(xp);
    const Interval fm = f.eval(xm);
    const double dlo = (fp.lo() - fm.lo()) / dd;
    const double dhi = (fp.hi() - fm.hi()) / dd;
    return Interval(std::min(dlo, dhi), std::max(dlo, dhi));
}

Interval partial_gh_derivative(const Ivf& f, const Point& x, std::size_t i, double h) {
    if (f.gradient)
        return f.gradient(x)[i];
    if (h <= 0.0)
        h = default_fd_step(x[i]);
    return fd_partial(f, x, i, h, false);
}

IntervalVector gh_gradient(const Ivf& f, const Point& x, double h) {
    if (f.gradient)
        return f.gradient(x);
    return gh_gradient_numeric(f, x, h, false);
}

IntervalVector gh_gradient_numeric(const Ivf& f, const Point& x, double h, bool clip_to_box) {
    std::vector<Interval> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double hi = h > 0.0 ? h : default_fd_step(x[i]);
        out.push_back(fd_partial(f, x, i, hi, clip_to_box));
    }
    return IntervalVector(std::move(out));
}

std::vector<double> w_map(const IntervalVector& v, const WeightPair& wp) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& c : v)
        out.push_back(wp.w * c.lo() + wp.w_prime * c.hi());
    return out;
}

bool is_stationary(const IntervalVector& g, double tol) {
    for (const auto& c : g)
        if (c.lo() > tol || c.hi() < -tol)
            return false;
    return true;
}

bool is_efficient_direction_candidate(const std::vector<double>& d, const IntervalVector& g) {
    const Dominance c = compare(Interval::point(0.0), inner_product(d, g));
    return c != Dominance::Dominates && c != Dominance::StrictlyDominates && c != Dominance::Equal;
}

}  // namespace ivopt
