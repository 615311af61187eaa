/*
 * Copyright 2026 The gpfnarx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GPFNARX_TYPES_HPP
#define GPFNARX_TYPES_HPP

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "gpfnarx/errors.hpp"

namespace gpfnarx {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double logit(double p) { return std::log(p / (1.0 - p)); }

/// Paired input/output record. dt is carried for reporting only; all
/// frequencies in the library are normalized to the sample rate.
struct TimeSeriesDataset {
    Vector u;
    Vector y;
    double dt = 1.0;

    Index size() const { return y.size(); }
};

/// NARX lag structure: na output lags, nb input lags, input delay nk.
struct ModelOrder {
    int na = 10;
    int nb = 10;
    int nk = 1;

    int dim() const { return na + nb; }

    /// Index of the first sample with all lags in range.
    Index horizon() const { return std::max<Index>(na, nb + nk - 1); }

    void validate() const {
        if (na < 0 || nb < 0) throw InvalidParams("model order: lag counts must be >= 0");
        if (nk < 1) throw InvalidParams("model order: input delay nk must be >= 1");
        if (na + nb < 1) throw InvalidParams("model order: need at least one regressor");
    }
};

/// GP hyper-parameters in unconstrained (log) coordinates.
struct GpHyperparams {
    Vector log_lengthscales; // one per regressor dimension (ARD)
    double log_signal_std = 0.0;
    double log_noise_std = 0.0;

    Index dim() const { return log_lengthscales.size(); }

    Vector lengthscales() const { return log_lengthscales.array().exp(); }
    double signal_std() const { return std::exp(log_signal_std); }
    double signal_var() const { return std::exp(2.0 * log_signal_std); }
    double noise_std() const { return std::exp(log_noise_std); }
    double noise_var() const { return std::exp(2.0 * log_noise_std); }

    static GpHyperparams defaults(Index d) {
        GpHyperparams th;
        th.log_lengthscales = Vector::Zero(d);
        th.log_signal_std = 0.0;
        th.log_noise_std = std::log(0.1);
        return th;
    }
};

/// Pre-processing parameters in unconstrained coordinates. The normalized
/// low-pass cutoff is c = sigmoid(logit_cutoff) in (0, 1), c = 1 being the
/// Nyquist frequency.
struct PreprocessParams {
    double logit_cutoff = 0.0;

    double cutoff() const { return sigmoid(logit_cutoff); }
};

/// Everything the trainer optimizes, grouped.
struct FullParams {
    PreprocessParams omega;
    GpHyperparams theta;
};

/// Constrained-space view of FullParams.
struct ConstrainedParams {
    double cutoff = 0.5;
    Vector lengthscales;
    double signal_std = 1.0;
    double noise_std = 1.0;
};

inline bool all_finite(const Vector& v) { return v.allFinite(); }

inline ConstrainedParams to_constrained(const FullParams& params) {
    if (!std::isfinite(params.omega.logit_cutoff) || !std::isfinite(params.theta.log_signal_std) ||
        !std::isfinite(params.theta.log_noise_std) || !all_finite(params.theta.log_lengthscales)) {
        throw InvalidParams("to_constrained: non-finite parameter");
    }
    ConstrainedParams c;
    c.cutoff = params.omega.cutoff();
    c.lengthscales = params.theta.lengthscales();
    c.signal_std = params.theta.signal_std();
    c.noise_std = params.theta.noise_std();
    return c;
}

inline FullParams to_unconstrained(const ConstrainedParams& c) {
    FullParams p;
    p.omega.logit_cutoff = logit(c.cutoff);
    p.theta.log_lengthscales = c.lengthscales.array().log();
    p.theta.log_signal_std = std::log(c.signal_std);
    p.theta.log_noise_std = std::log(c.noise_std);
    return p;
}

/// Lagged regressor matrix and aligned raw targets. Row i is built from
/// samples strictly before the sample of targets[i]; t0 is the source index
/// of targets[0].
struct RegressorSet {
    Matrix X;       // T x D
    Vector targets; // T
    Index t0 = 0;
};

/// Column-wise affine transform fitted on a regressor set. Zero-variance
/// columns get deviation 1 so constant signals pass through.
struct Standardizer {
    Vector x_mean;
    Vector x_std;
    double y_mean = 0.0;
    double y_std = 1.0;

    static Standardizer fit(const Matrix& X, const Vector& y) {
        Standardizer s;
        const double n = static_cast<double>(X.rows());
        s.x_mean = X.colwise().mean();
        s.x_std = ((X.rowwise() - s.x_mean.transpose()).array().square().colwise().sum() / n)
                      .sqrt()
                      .transpose();
        for (Index j = 0; j < s.x_std.size(); ++j) {
            if (!(s.x_std(j) > 0.0)) s.x_std(j) = 1.0;
        }
        s.y_mean = y.mean();
        s.y_std = std::sqrt((y.array() - s.y_mean).square().sum() / static_cast<double>(y.size()));
        if (!(s.y_std > 0.0)) s.y_std = 1.0;
        return s;
    }

    Matrix standardize_x(const Matrix& X) const {
        return (X.rowwise() - x_mean.transpose()).array().rowwise() /
               x_std.transpose().array();
    }

    Vector standardize_row(const Vector& row) const {
        return (row - x_mean).cwiseQuotient(x_std);
    }

    Vector standardize_y(const Vector& y) const { return (y.array() - y_mean) / y_std; }

    double unstandardize_mean(double m) const { return m * y_std + y_mean; }
    double unstandardize_var(double v) const { return v * y_std * y_std; }

    Matrix unstandardize_x(const Matrix& Xs) const {
        return (Xs.array().rowwise() * x_std.transpose().array()).rowwise() +
               x_mean.transpose().array();
    }
};

/// Checks the dataset invariants against a model order. Throws on failure.
inline void validate_dataset(const TimeSeriesDataset& ds, const ModelOrder& order) {
    order.validate();
    if (ds.u.size() != ds.y.size()) {
        throw LengthMismatch("dataset: u has " + std::to_string(ds.u.size()) + " samples, y has " +
                             std::to_string(ds.y.size()));
    }
    if (ds.size() < 1) throw LengthMismatch("dataset: empty");
    if (!ds.u.allFinite()) throw NonFiniteSample("dataset: non-finite value in u");
    if (!ds.y.allFinite()) throw NonFiniteSample("dataset: non-finite value in y");
    if (ds.size() <= order.horizon() + 1) {
        throw TooShortForOrder("dataset: " + std::to_string(ds.size()) +
                               " samples cannot support lag horizon " +
                               std::to_string(order.horizon()));
    }
}

} // namespace gpfnarx

#endif // GPFNARX_TYPES_HPP
