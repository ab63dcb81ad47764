#pragma once

#include "ivopt/solver.hpp"

namespace ivopt {

struct IntervalDataset {
    struct Row {
        Interval x;
        Interval y;
    };
    std::vector<Row> rows;

    std::size_t size() const { return rows.size(); }
};

enum class ModelKind { Polynomial, Logistic };

struct ModelSpec {
    ModelKind kind;
    Interval c;
    int param_dim;

    static ModelSpec polynomial(const Interval& c) { return {ModelKind::Polynomial, c, 3}; }
    static ModelSpec logistic(const Interval& c) { return {ModelKind::Logistic, c, 2}; }
};

// H(X; beta): beta1*C + beta2*X + beta3*(X*X), or 1/(1 + exp(-(beta1*C + beta2*X))).
Interval model_eval(const ModelSpec& m, const Interval& x, const std::vector<double>& beta);

// D_i H per the analytic model formulas: {C, X, X*X} for the polynomial,
// (1/(1+exp(-S))^2) * {C, X} for the logistic.
Interval model_partial(const ModelSpec& m, const Interval& x, const std::vector<double>& beta,
                       std::size_t i);

// E(beta) = sum_k (H(X_k;beta) gh- Y_k) * (H(X_k;beta) gh- Y_k).
Interval error_eval(const ModelSpec& m, const IntervalDataset& data, const std::vector<double>& beta);

// Partial gH-derivatives of E: exact forward tangents of the endpoint
// functions of E, sorted into intervals per the gH-derivative definition.
IntervalVector error_gradient(const ModelSpec& m, const IntervalDataset& data,
                              const std::vector<double>& beta);

// The interval chain-rule form 2 * sum_k (H gh- Y_k) * D_i H. An enclosure
// built from model_partial; generally wider than the gH-derivative of E.
IntervalVector error_gradient_envelope(const ModelSpec& m, const IntervalDataset& data,
                                       const std::vector<double>& beta);

// The true scalarized gradient d/dbeta (w*E_lo + w'*E_hi), keeping each
// endpoint tangent with its own endpoint (no sorting).
std::vector<double> error_gradient_scalarized(const ModelSpec& m, const IntervalDataset& data,
                                              const std::vector<double>& beta, const WeightPair& wp);

Ivf error_ivf(const ModelSpec& m, const IntervalDataset& data);

struct FitResult {
    std::vector<double> beta_hat;
    SolveTrace trace;
};

FitResult fit(const ModelSpec& m, const IntervalDataset& data, const std::vector<double>& beta0,
              const WeightPair& wp, SolverConfig cfg);

}  // namespace ivopt
