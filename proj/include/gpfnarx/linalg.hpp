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

#ifndef GPFNARX_LINALG_HPP
#define GPFNARX_LINALG_HPP

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "gpfnarx/errors.hpp"
#include "gpfnarx/types.hpp"

namespace gpfnarx {

struct CholeskyFactor {
    Matrix L;            // lower triangular
    double jitter = 0.0; // diagonal shift that made the factorization succeed

    Vector solve(const Vector& b) const {
        Vector x = L.triangularView<Eigen::Lower>().solve(b);
        return L.transpose().triangularView<Eigen::Upper>().solve(x);
    }

    Matrix solve(const Matrix& B) const {
        Matrix X = L.triangularView<Eigen::Lower>().solve(B);
        return L.transpose().triangularView<Eigen::Upper>().solve(X);
    }

    Vector solve_lower(const Vector& b) const {
        return L.triangularView<Eigen::Lower>().solve(b);
    }

    Matrix solve_lower(const Matrix& B) const {
        return L.triangularView<Eigen::Lower>().solve(B);
    }

    Vector solve_upper(const Vector& b) const {
        return L.transpose().triangularView<Eigen::Upper>().solve(b);
    }

    Matrix solve_upper(const Matrix& B) const {
        return L.transpose().triangularView<Eigen::Upper>().solve(B);
    }

    double log_det() const { return 2.0 * L.diagonal().array().log().sum(); }
};

constexpr double kJitterStart = 1e-10;
constexpr double kJitterMax = 1e-4;

/// Cholesky with jitter escalation: on failure add jitter_start*scale to the
/// diagonal, escalating x10 up to jitter_max*scale, then throw
/// NotPositiveDefinite. scale should be the prior variance of the matrix
/// (sf^2 for kernel matrices).
inline CholeskyFactor cholesky_with_jitter(const Matrix& K, double scale,
                                           const std::string& what = "matrix") {
    CholeskyFactor out;
    Eigen::LLT<Matrix> llt(K);
    if (llt.info() == Eigen::Success) {
        out.L = llt.matrixL();
        return out;
    }
    for (double j = kJitterStart * scale; j <= kJitterMax * scale * (1.0 + 1e-12); j *= 10.0) {
        Matrix Kj = K;
        Kj.diagonal().array() += j;
        llt.compute(Kj);
        if (llt.info() == Eigen::Success) {
            out.L = llt.matrixL();
            out.jitter = j;
            return out;
        }
    }
    throw NotPositiveDefinite(what + ": Cholesky failed after jitter escalation");
}

} // namespace gpfnarx

#endif // GPFNARX_LINALG_HPP
