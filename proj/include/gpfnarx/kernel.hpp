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

#ifndef GPFNARX_KERNEL_HPP
#define GPFNARX_KERNEL_HPP

#include <cmath>
#include <optional>

#include "gpfnarx/errors.hpp"
#include "gpfnarx/types.hpp"

namespace gpfnarx {

/// Squared-exponential ARD covariance:
///   k(x, x') = sf^2 * exp(-1/2 * sum_d (x_d - x'_d)^2 / ell_d^2)
inline double k_se_ard(const Vector& x, const Vector& x2, const GpHyperparams& theta) {
    if (x.size() != x2.size() || x.size() != theta.dim()) {
        throw DimError("k_se_ard: dimension mismatch");
    }
    const Vector ell = theta.lengthscales();
    double z = (x - x2).cwiseQuotient(ell).squaredNorm();
    return theta.signal_var() * std::exp(-0.5 * z);
}

/// Kernel value plus optional partials with respect to the unconstrained
/// hyper-parameters [log ell_1..D, log sf].
struct KernelEval {
    double value = 0.0;
    std::optional<Vector> grad_theta;
};

inline KernelEval k_se_ard_eval(const Vector& x, const Vector& x2, const GpHyperparams& theta,
                                bool with_grad = false) {
    if (x.size() != x2.size() || x.size() != theta.dim()) {
        throw DimError("k_se_ard_eval: dimension mismatch");
    }
    const Vector ell = theta.lengthscales();
    Eigen::ArrayXd z = (x - x2).cwiseQuotient(ell).array().square();
    KernelEval out;
    out.value = theta.signal_var() * std::exp(-0.5 * z.sum());
    if (with_grad) {
        Vector g(theta.dim() + 1);
        g.head(theta.dim()) = z.matrix() * out.value; // d/d log ell_d
        g(theta.dim()) = 2.0 * out.value;             // d/d log sf
        out.grad_theta = std::move(g);
    }
    return out;
}

/// K(A, B)_ij = k(a_i, b_j), rows of A and B are points.
inline Matrix k_matrix(const Matrix& A, const Matrix& B, const GpHyperparams& theta) {
    if (A.cols() != B.cols() || A.cols() != theta.dim()) {
        throw DimError("k_matrix: dimension mismatch");
    }
    const Vector inv_ell = theta.lengthscales().cwiseInverse();
    const double sf2 = theta.signal_var();
    // Scale once so inner loops are plain squared distances.
    Matrix As = A.array().rowwise() * inv_ell.transpose().array();
    Matrix Bs = B.array().rowwise() * inv_ell.transpose().array();
    Matrix K(A.rows(), B.rows());
    for (Index j = 0; j < B.rows(); ++j) {
        for (Index i = 0; i < A.rows(); ++i) {
            K(i, j) = sf2 * std::exp(-0.5 * (As.row(i) - Bs.row(j)).squaredNorm());
        }
    }
    return K;
}

/// K(A, A) with exact symmetry and exact sf^2 diagonal.
inline Matrix k_matrix_symm(const Matrix& A, const GpHyperparams& theta) {
    if (A.cols() != theta.dim()) throw DimError("k_matrix_symm: dimension mismatch");
    const Vector inv_ell = theta.lengthscales().cwiseInverse();
    const double sf2 = theta.signal_var();
    Matrix As = A.array().rowwise() * inv_ell.transpose().array();
    Matrix K(A.rows(), A.rows());
    for (Index j = 0; j < A.rows(); ++j) {
        K(j, j) = sf2;
        for (Index i = j + 1; i < A.rows(); ++i) {
            double v = sf2 * std::exp(-0.5 * (As.row(i) - As.row(j)).squaredNorm());
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

/// Element-wise partial of k_matrix with respect to one unconstrained
/// hyper-parameter. which in [0, D) selects log ell_{which}; which == D
/// selects log sf.
inline Matrix k_matrix_grad(const Matrix& A, const Matrix& B, const GpHyperparams& theta,
                            Index which) {
    const Index d = theta.dim();
    if (which < 0 || which > d) throw IndexError("k_matrix_grad: parameter index out of range");
    Matrix K = k_matrix(A, B, theta);
    if (which == d) return 2.0 * K; // d/d log sf: sf^2 = exp(2 log sf)
    const double inv_ell2 = std::exp(-2.0 * theta.log_lengthscales(which));
    Matrix S = (A.col(which).replicate(1, B.rows()) -
                B.col(which).transpose().replicate(A.rows(), 1))
                   .array()
                   .square() *
               inv_ell2;
    return K.cwiseProduct(S);
}

} // namespace gpfnarx

#endif // GPFNARX_KERNEL_HPP
