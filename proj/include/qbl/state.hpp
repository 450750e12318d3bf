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

// Two-qudit pure states held as their d x d coefficient matrix M, with
// |psi> = sum_ij M_ij |i j>.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"

namespace qbl {

inline constexpr double kNormTolerance = 1e-10;

class TwoQuditState {
  public:
    /// Throws ContractViolation unless M is square, 2 <= d <= 8 and
    /// Tr(M^dagger M) = 1 within 1e-10.
    explicit TwoQuditState(CMatrix coefficients) : m_(std::move(coefficients)) {
        require(m_.rows() == m_.cols(), "TwoQuditState: coefficient matrix must be square");
        const int d = static_cast<int>(m_.rows());
        require(d >= kMinQuditDim && d <= kMaxQuditDim, "TwoQuditState: dimension must lie in [2, 8]");
        require(m_.allFinite(), "TwoQuditState: non-finite coefficients");
        require(std::abs(m_.squaredNorm() - 1.0) <= kNormTolerance, "TwoQuditState: state is not normalized");
    }

    int d() const { return static_cast<int>(m_.rows()); }
    const CMatrix &coefficients() const { return m_; }

    /// Amplitudes in the product basis, index i * d + j.
    CVector amplitudes() const {
        const int n = d();
        CVector psi(n * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                psi(i * n + j) = m_(i, j);
            }
        }
        return psi;
    }

  private:
    CMatrix m_;
};

/// Schmidt coefficients of a state prepared in its Schmidt basis.
struct SchmidtSpec {
    int d = 0;
    std::vector<double> weights;  // nonnegative, descending, sum of squares 1

    void validate() const {
        require(d >= kMinQuditDim && d <= kMaxQuditDim, "SchmidtSpec: dimension must lie in [2, 8]");
        require(weights.size() == static_cast<std::size_t>(d), "SchmidtSpec: need exactly d weights");
        double norm2 = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            require(std::isfinite(weights[k]) && weights[k] >= 0.0, "SchmidtSpec: weights must be nonnegative");
            require(k == 0 || weights[k] <= weights[k - 1], "SchmidtSpec: weights must be descending");
            norm2 += weights[k] * weights[k];
        }
        require(std::abs(norm2 - 1.0) <= kNormTolerance, "SchmidtSpec: squared weights must sum to 1");
    }

    static SchmidtSpec maximally_entangled(int d) {
        return SchmidtSpec{d, std::vector<double>(static_cast<std::size_t>(d), 1.0 / std::sqrt(double(d)))};
    }

    /// Two-qubit Schmidt weights (cos a, sin a) with concurrence sin 2a = C.
    static SchmidtSpec from_concurrence(double c) {
        require(c >= 0.0 && c <= 1.0, "SchmidtSpec: concurrence must lie in [0, 1]");
        const double a = 0.5 * std::asin(c);
        return SchmidtSpec{2, {std::cos(a), std::sin(a)}};
    }
};

inline TwoQuditState from_schmidt(const SchmidtSpec &spec) {
    spec.validate();
    CMatrix m = CMatrix::Zero(spec.d, spec.d);
    for (int j = 0; j < spec.d; ++j) {
        m(j, j) = spec.weights[static_cast<std::size_t>(j)];
    }
    return TwoQuditState(std::move(m));
}

/// Normalized complex Ginibre coefficient matrix; nonsingular with probability one.
inline TwoQuditState random_state(int d, Rng &rng) {
    require_qudit_dim(d);
    CMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            const double re = rng.normal();
            m(i, j) = Complex(re, rng.normal());
        }
    }
    m /= m.norm();
    return TwoQuditState(std::move(m));
}

/// M = exp(i theta) Q S: U(1) phase, Hermitian factor and SU(d) factor.
struct SectorDecomposition {
    double theta = 0.0;  // principal branch (-pi/d, pi/d]
    CMatrix Q;
    CMatrix S;

    CMatrix reconstruct() const { return std::polar(1.0, theta) * Q * S; }
};

inline SectorDecomposition decompose_sectors(const TwoQuditState &state) {
    const PolarDecomposition polar = polar_decompose(state.coefficients());
    const double d = state.d();
    SectorDecomposition out;
    out.theta = std::arg(polar.unitary.determinant()) / d;
    out.Q = polar.hermitian;
    out.S = polar.unitary * std::polar(1.0, -out.theta);
    return out;
}

/// M -> U_A M U_B^T, i.e. (U_A (x) U_B) |psi>.
inline TwoQuditState evolve_local(const TwoQuditState &state, const CMatrix &u_a, const CMatrix &u_b) {
    const int d = state.d();
    require(u_a.rows() == d && u_a.cols() == d && u_b.rows() == d && u_b.cols() == d,
            "evolve_local: local unitaries must be d x d");
    require_unitary(u_a, "evolve_local(U_A)");
    require_unitary(u_b, "evolve_local(U_B)");
    CMatrix evolved = u_a * state.coefficients() * u_b.transpose();
    return TwoQuditState(std::move(evolved));
}

/// <psi(0)|psi(t)> = Tr[M(0)^dagger M(t)].
inline Complex overlap(const TwoQuditState &initial, const TwoQuditState &evolved) {
    require(initial.d() == evolved.d(), "overlap: dimension mismatch");
    return (initial.coefficients().adjoint() * evolved.coefficients()).trace();
}

/// Pure-state concurrence 2 |det M| of a two-qubit state.
inline double concurrence(const TwoQuditState &state) {
    if (state.d() != 2) {
        throw UnsupportedDimension("concurrence: only defined here for d = 2, got d = " +
                                   std::to_string(state.d()));
    }
    return std::min(1.0, 2.0 * std::abs(state.coefficients().determinant()));
}

}  // namespace qbl
