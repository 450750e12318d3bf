// Copyright 2026 The qudit-bound-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra for the small fixed dimensions used here
// (2 <= d <= 8 for single qudits, d^2 and 2 d^2 for composite registers).
// Decompositions are delegated to Eigen.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbl/errors.hpp"
#include "qbl/rng.hpp"

namespace qbl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMinQuditDim = 2;
inline constexpr int kMaxQuditDim = 8;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle onto (-pi, pi].
inline double canonical_angle(double x) {
    double a = std::remainder(x, kTwoPi);
    if (a <= -kPi) {
        a += kTwoPi;
    }
    return a;
}

/// Distance of an angle from the nearest multiple of 2 pi.
inline double distance_to_multiple_of_two_pi(double x) { return std::abs(std::remainder(x, kTwoPi)); }

inline double max_abs(const CMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline bool all_finite(const CMatrix &m) { return m.allFinite(); }

/// ||U^dagger U - 1||_max
inline double unitarity_error(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

inline bool is_unitary(const CMatrix &u, double tol = 1e-9) { return unitarity_error(u) <= tol; }

inline bool is_hermitian(const CMatrix &m, double tol = 1e-12) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline void require_unitary(const CMatrix &u, const char *what, double tol = 1e-9) {
    if (u.rows() != u.cols()) {
        throw ContractViolation(std::string(what) + ": matrix is not square");
    }
    if (!is_unitary(u, tol)) {
        throw ContractViolation(std::string(what) + ": matrix is not unitary (error " +
                                std::to_string(unitarity_error(u)) + ")");
    }
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline void require_qudit_dim(int d) {
    if (d < kMinQuditDim || d > kMaxQuditDim) {
        throw std::out_of_range("qudit dimension must lie in [2, 8], got " + std::to_string(d));
    }
}

/// Haar-distributed element of U(d): QR of a complex Ginibre matrix, with the
/// phases of diag(R) pushed back into Q so the factorization is unique.
inline CMatrix haar_unitary(int d, Rng &rng) {
    require_qudit_dim(d);
    CMatrix ginibre(d, d);
    const double scale = 1.0 / std::numbers::sqrt2;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            ginibre(i, j) = Complex(re, im) * scale;
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(ginibre);
    CMatrix q = qr.householderQ();
    const CMatrix &packed = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const Complex r = packed(j, j);
        const double mag = std::abs(r);
        // r == 0 has probability zero; leave the column alone if it happens.
        if (mag > 0.0) {
            q.col(j) *= r / mag;
        }
    }
    return q;
}

/// S = exp(-i arg(det U) / d) U, using the principal branch of arg.
inline CMatrix project_su(const CMatrix &u) {
    require_unitary(u, "project_su");
    const auto d = static_cast<double>(u.rows());
    const double angle = std::arg(u.determinant());
    return u * std::polar(1.0, -angle / d);
}

struct PolarDecomposition {
    CMatrix hermitian;  // (M M^dagger)^{1/2}
    CMatrix unitary;
};

inline constexpr double kSingularDeterminant = 1e-12;

/// Left polar decomposition M = Q U computed from the SVD M = W Sigma V^dagger:
/// Q = W Sigma W^dagger, U = W V^dagger.
inline PolarDecomposition polar_decompose(const CMatrix &m) {
    require(m.rows() == m.cols() && m.rows() > 0, "polar_decompose: matrix must be square");
    if (std::abs(m.determinant()) <= kSingularDeterminant) {
        throw SingularCoefficientMatrix("polar_decompose: |det M| <= 1e-12");
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const CMatrix &w = svd.matrixU();
    const CMatrix &v = svd.matrixV();
    const Eigen::VectorXd &sigma = svd.singularValues();
    PolarDecomposition out;
    out.hermitian = w * sigma.cast<Complex>().asDiagonal() * w.adjoint();
    // Symmetrize away the rounding asymmetry.
    out.hermitian = 0.5 * (out.hermitian + out.hermitian.adjoint()).eval();
    out.unitary = w * v.adjoint();
    return out;
}

/// Eigenphases of a special unitary, each in (-pi, pi], sorted ascending.
struct EigenphaseConfig {
    int d = 0;
    std::vector<double> phases;

    double sum() const { return std::accumulate(phases.begin(), phases.end(), 0.0); }

    /// Distance of sum(phases) from the nearest multiple of 2 pi.
    double sum_residual() const { return distance_to_multiple_of_two_pi(sum()); }

    bool balanced(double tol = 1e-9) const { return sum_residual() <= tol; }
};

inline EigenphaseConfig eigenphases(const CMatrix &s) {
    require_unitary(s, "eigenphases");
    if (std::abs(s.determinant() - Complex(1.0, 0.0)) > 1e-9) {
        throw ContractViolation("eigenphases: determinant differs from 1");
    }
    Eigen::ComplexEigenSolver<CMatrix> solver(s, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenphases: eigen decomposition did not converge");
    }
    EigenphaseConfig out;
    out.d = static_cast<int>(s.rows());
    out.phases.reserve(static_cast<std::size_t>(out.d));
    for (Eigen::Index k = 0; k < s.rows(); ++k) {
        out.phases.push_back(canonical_angle(std::arg(solver.eigenvalues()(k))));
    }
    std::stable_sort(out.phases.begin(), out.phases.end());
    return out;
}

}  // namespace qbl
