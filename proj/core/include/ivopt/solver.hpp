#pragma once

#include "ivopt/ivf.hpp"

namespace ivopt {

struct LineSearchConfig {
    double max_alpha = 10.0;  // cap on ||x_{k+1} - x_k||
    double ls_tol = 1e-8;     // golden-section bracket width, in x-space
    int max_ls_iter = 200;
};

struct SolverConfig {
    WeightPair weights{0.5};
    Point x0;
    double grad_tol = 1e-6;
    double step_tol = 1e-12;
    double dir_tol = 1e-6;   // ||d||_inf threshold, relative to the scalarized value
    double stat_step_tol = 1e-4;  // accept stationarity when the step shrinks below this
    int max_iter = 500;
    LineSearchConfig line_search;
    std::optional<double> fd_step;
};

enum class SolveStatus { Stationary, StepBelowTol, MaxIter };

struct IterationRecord {
    int k = 0;
    Point x;
    Interval fx;
    IntervalVector grad;
    std::vector<double> direction;
    double alpha = 0.0;
    bool nondomination_ok = true;
};

struct SolveTrace {
    std::vector<IterationRecord> iterations;
    SolveStatus status = SolveStatus::MaxIter;
    std::vector<double> contraction_ratios;  // filled when a reference point is supplied

    int steps() const { return static_cast<int>(iterations.size()) - 1; }
    const Point& terminal_x() const { return iterations.back().x; }
};

// Contract: 0 must not dominate d' * grad F(x) for the returned d.
using DirectionOracle = std::function<std::vector<double>(const Point&, const IntervalVector&)>;

// Largest alpha <= alpha_max keeping x + alpha*d inside the box.
double clip_alpha_to_box(const Point& x, const std::vector<double>& d, const Box& box,
                         double alpha_max);

// Golden-section minimization of the w-scalarized section phi(alpha) =
// w*f_lo(x+alpha*d) + w'*f_hi(x+alpha*d) over (0, alpha_max'] where the cap
// keeps ||alpha*d|| <= max_alpha and x+alpha*d inside the box.
double line_search_argeff(const Ivf& f, const Point& x, const std::vector<double>& d,
                          const WeightPair& wp, const SolverConfig& cfg);

SolveTrace solve_general(const Ivf& f, const DirectionOracle& oracle, const SolverConfig& cfg,
                         const Point* x_ref = nullptr);

// Algorithm 2: d_k = -W(grad F(x_k)).
SolveTrace solve_w_gradient(const Ivf& f, const SolverConfig& cfg, const Point* x_ref = nullptr);

DirectionOracle w_gradient_oracle(const SolverConfig& cfg);

std::string to_string(SolveStatus s);

}  // namespace ivopt
