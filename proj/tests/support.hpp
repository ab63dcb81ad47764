#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "ivopt/ivf.hpp"

namespace testsupport {

inline ivopt::Interval random_interval(std::mt19937& rng, double span = 10.0) {
    std::uniform_real_distribution<double> mid(-span, span);
    std::uniform_real_distribution<double> wid(0.0, span / 2.0);
    const double lo = mid(rng);
    return ivopt::Interval(lo, lo + wid(rng));
}

inline ivopt::IntervalVector random_interval_vector(std::mt19937& rng, std::size_t n,
                                                    double span = 10.0) {
    std::vector<ivopt::Interval> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(random_interval(rng, span));
    return ivopt::IntervalVector(std::move(v));
}

constexpr int kPropertySamples = 10000;

// True when the central-difference stencil of every endpoint function sits on
// a smooth piece: forward and backward one-sided differences must agree (a
// min/max branch switch inside the stencil makes them jump apart).
inline bool fd_stencil_smooth(const ivopt::Ivf& f, const ivopt::Point& x, double rel_tol) {
    for (int i = 0; i < f.dim; ++i) {
        const double h = ivopt::default_fd_step(x[i]);
        ivopt::Point xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const ivopt::Interval fp = f.eval(xp), f0 = f.eval(x), fm = f.eval(xm);
        double fwd[2] = {(fp.lo() - f0.lo()) / h, (fp.hi() - f0.hi()) / h};
        double bwd[2] = {(f0.lo() - fm.lo()) / h, (f0.hi() - fm.hi()) / h};
        std::sort(fwd, fwd + 2);
        std::sort(bwd, bwd + 2);
        double scale = 1.0;
        for (double v : {fwd[0], fwd[1], bwd[0], bwd[1]})
            scale = std::max(scale, std::fabs(v));
        for (int e = 0; e < 2; ++e)
            if (std::fabs(fwd[e] - bwd[e]) > rel_tol * scale)
                return false;
    }
    return true;
}

}  // namespace testsupport
