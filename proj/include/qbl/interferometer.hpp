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

// Density-matrix model of the ancilla interferometer: pseudo-pure preparation
// rho = (1 - eps) 1/D + eps |0><0| (x) |psi><psi|, Hadamard on the ancilla,
// controlled-U on the two-qudit register, then <sigma_x> + i <sigma_y> of the
// ancilla, which equals eps <psi|U|psi>.
//
// Register layout: ancilla is the most significant factor, index
// a * d^2 + (i * d + j).

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"
#include "qbl/state.hpp"

namespace qbl {

struct DensityState {
    int d = 0;  // qudit dimension; total dimension is 2 d^2
    CMatrix rho;

    Eigen::Index dim() const { return rho.rows(); }
    Eigen::Index system_dim() const { return rho.rows() / 2; }

    double trace_error() const { return std::abs(rho.trace() - Complex(1.0, 0.0)); }
    double hermiticity_error() const { return max_abs(rho - rho.adjoint()); }

    double min_eigenvalue() const {
        const CMatrix h = 0.5 * (rho + rho.adjoint());
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }

    double purity() const { return (rho * rho).trace().real(); }

    /// Unit trace, Hermitian, positive semidefinite (with the tolerances used
    /// throughout the tests).
    bool valid(double tol = 1e-10, double eig_tol = 1e-9) const {
        return trace_error() <= tol && hermiticity_error() <= tol && min_eigenvalue() >= -eig_tol;
    }
};

struct ReadoutResult {
    Complex signal;  // <sigma_x> + i <sigma_y> of the ancilla
    double epsilon = 1.0;

    Complex normalized() const { return signal / epsilon; }
};

inline void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw std::out_of_range("polarization epsilon must lie in (0, 1]");
    }
}

inline DensityState build_pps(const TwoQuditState &system, double epsilon) {
    require_epsilon(epsilon);
    const int d = system.d();
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    const Eigen::Index dim = 2 * n;
    const CVector psi = system.amplitudes();
    DensityState out;
    out.d = d;
    out.rho = CMatrix::Identity(dim, dim) * ((1.0 - epsilon) / static_cast<double>(dim));
    out.rho.topLeftCorner(n, n) += epsilon * psi * psi.adjoint();
    return out;
}

inline DensityState apply_hadamard_ancilla(const DensityState &state) {
    const Eigen::Index n = state.system_dim();
    const CMatrix &r = state.rho;
    const CMatrix a = r.topLeftCorner(n, n);
    const CMatrix b = r.topRightCorner(n, n);
    const CMatrix c = r.bottomLeftCorner(n, n);
    const CMatrix e = r.bottomRightCorner(n, n);
    DensityState out{state.d, CMatrix(r.rows(), r.cols())};
    out.rho.topLeftCorner(n, n) = 0.5 * (a + b + c + e);
    out.rho.topRightCorner(n, n) = 0.5 * (a - b + c - e);
    out.rho.bottomLeftCorner(n, n) = 0.5 * (a + b - c - e);
    out.rho.bottomRightCorner(n, n) = 0.5 * (a - b - c + e);
    return out;
}

/// |0><0| (x) 1 + |1><1| (x) U applied by conjugation.
inline DensityState apply_controlled(const DensityState &state, const CMatrix &u) {
    const Eigen::Index n = state.system_dim();
    require(u.rows() == n && u.cols() == n, "apply_controlled: U must act on the d^2-dimensional register");
    require_unitary(u, "apply_controlled");
    DensityState out = state;
    out.rho.topRightCorner(n, n) = state.rho.topRightCorner(n, n) * u.adjoint();
    out.rho.bottomLeftCorner(n, n) = u * state.rho.bottomLeftCorner(n, n);
    out.rho.bottomRightCorner(n, n) = u * state.rho.bottomRightCorner(n, n) * u.adjoint();
    return out;
}

/// Scales the ancilla coherences (off-diagonal ancilla blocks) by 1 - gamma.
inline DensityState apply_dephasing(const DensityState &state, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::out_of_range("dephasing gamma must lie in [0, 1]");
    }
    const Eigen::Index n = state.system_dim();
    DensityState out = state;
    out.rho.topRightCorner(n, n) *= (1.0 - gamma);
    out.rho.bottomLeftCorner(n, n) *= (1.0 - gamma);
    return out;
}

/// Tr[rho (sigma_x + i sigma_y) (x) 1] = 2 Tr[rho_{10}], the ancilla block <1|rho|0>.
inline Complex ancilla_signal(const DensityState &state) {
    const Eigen::Index n = state.system_dim();
    return 2.0 * state.rho.bottomLeftCorner(n, n).trace();
}

inline ReadoutResult run_interferometry(const TwoQuditState &system, const CMatrix &u, double epsilon,
                                        double gamma = 0.0) {
    const Eigen::Index n = static_cast<Eigen::Index>(system.d()) * system.d();
    require(u.rows() == n && u.cols() == n, "run_interferometry: U must be d^2 x d^2");
    DensityState rho = build_pps(system, epsilon);
    rho = apply_hadamard_ancilla(rho);
    rho = apply_controlled(rho, u);
    if (gamma != 0.0) {
        rho = apply_dephasing(rho, gamma);
    }
    return ReadoutResult{ancilla_signal(rho), epsilon};
}

/// U_A (x) U_B on the two-qudit register.
inline CMatrix local_product(const CMatrix &u_a, const CMatrix &u_b) { return kron(u_a, u_b); }

}  // namespace qbl
