#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ivopt/interval_vector.hpp"

namespace ivopt {

struct WeightPair {
    double w;
    double w_prime;

    explicit WeightPair(double w_) : w(w_), w_prime(1.0 - w_) {
        if (!(w >= 0.0 && w <= 1.0))
            throw InvalidInterval("weight outside [0,1]: " + std::to_string(w));
    }
};

using Point = std::vector<double>;
using Box = std::vector<std::array<double, 2>>;

// Interval-valued objective F: R^n -> I(R). The endpoint functions are read
// off the evaluated interval; an analytic gradient closure is optional.
struct Ivf {
    int dim = 0;
    std::function<Interval(const Point&)> eval;
    std::function<IntervalVector(const Point&)> gradient;  // may be empty
    std::optional<Box> domain_box;

    bool in_box(const Point& x) const;
};

double default_fd_step(double xi);

// Analytic component when the gradient closure is present, otherwise central
// differences of the endpoint functions sorted into an interval. h <= 0
// selects the default per-coordinate step.
Interval partial_gh_derivative(const Ivf& f, const Point& x, std::size_t i, double h = 0.0);
IntervalVector gh_gradient(const Ivf& f, const Point& x, double h = 0.0);

// Always the finite-difference path, ignoring any analytic closure. When
// clip_to_box is set the sample points are clamped to the domain box instead
// of raising DomainViolation (used by the solver near boundaries).
IntervalVector gh_gradient_numeric(const Ivf& f, const Point& x, double h = 0.0,
                                   bool clip_to_box = false);

// W(A_1,...,A_n) = (w*lo_1 + w'*hi_1, ...).
std::vector<double> w_map(const IntervalVector& v, const WeightPair& wp);

// 0 in every gradient component, within tol.
bool is_stationary(const IntervalVector& g, double tol);

// 0 does not dominate d' * g (necessary condition for an efficient direction).
bool is_efficient_direction_candidate(const std::vector<double>& d, const IntervalVector& g);

}  // namespace ivopt
