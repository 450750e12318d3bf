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

#include "qbl/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace qbl;

namespace {

CMatrix diag_phases(const std::vector<double> &phases) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(phases.size()), static_cast<Eigen::Index>(phases.size()));
    for (std::size_t k = 0; k < phases.size(); ++k) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = std::polar(1.0, phases[k]);
    }
    return m;
}

CMatrix random_permutation(int d, Rng &rng) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform() * (i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    CMatrix p = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    }
    return p;
}

}  // namespace

TEST(CanonicalAngle, MapsOntoHalfOpenInterval) {
    EXPECT_DOUBLE_EQ(canonical_angle(kPi), kPi);
    EXPECT_DOUBLE_EQ(canonical_angle(-kPi), kPi);
    EXPECT_NEAR(canonical_angle(3 * kPi), kPi, 1e-15);
    EXPECT_NEAR(canonical_angle(kTwoPi + 0.25), 0.25, 1e-15);
    EXPECT_NEAR(canonical_angle(-0.25), -0.25, 1e-15);
}

TEST(HaarUnitary, IsUnitary) {
    Rng rng(11);
    for (int d = 2; d <= 4; ++d) {
        for (int k = 0; k < 1000; ++k) {
            ASSERT_LE(unitarity_error(haar_unitary(d, rng)), 1e-12) << "d=" << d;
        }
    }
    EXPECT_LE(unitarity_error(haar_unitary(8, rng)), 1e-12);
}

TEST(HaarUnitary, DeterministicUnderFixedSeed) {
    Rng a(1234, 5);
    Rng b(1234, 5);
    EXPECT_EQ(haar_unitary(3, a), haar_unitary(3, b));
    Rng c(1234, 6);
    EXPECT_NE(haar_unitary(3, a), haar_unitary(3, c));
}

TEST(HaarUnitary, RejectsOutOfRangeDimension) {
    Rng rng(1);
    EXPECT_THROW(haar_unitary(9, rng), std::out_of_range);
    EXPECT_THROW(haar_unitary(1, rng), std::out_of_range);
}

TEST(HaarUnitary, SecondMomentOfTraceIsOne) {
    // For Haar U(d), E|Tr U|^2 = 1. Direct Monte Carlo average.
    Rng rng(2024);
    const int n = 10000;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += std::norm(haar_unitary(2, rng).trace());
    }
    EXPECT_NEAR(sum / n, 1.0, 0.05);
}

TEST(HaarUnitary, DiagonalPhasesAreUniform) {
    // With the R-diagonal phase correction, arg U_00 is uniform; plain QR
    // would leave it concentrated. Mean of exp(i arg U_00) vanishes.
    Rng rng(99);
    Complex mean(0.0, 0.0);
    const int n = 20000;
    for (int k = 0; k < n; ++k) {
        const Complex u00 = haar_unitary(3, rng)(0, 0);
        mean += u00 / std::abs(u00);
    }
    mean /= double(n);
    EXPECT_LT(std::abs(mean), 0.03);
}

TEST(ProjectSU, IdentityIsFixed) {
    const CMatrix id = CMatrix::Identity(3, 3);
    EXPECT_LE(max_abs(project_su(id) - id), 1e-15);
}

TEST(ProjectSU, RemovesDeterminantPhase) {
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = Complex(0, 1);
    u(1, 1) = Complex(0, 1);
    EXPECT_NEAR(std::abs(u.determinant() - Complex(-1, 0)), 0.0, 1e-15);
    const CMatrix s = project_su(u);
    EXPECT_LE(std::abs(s.determinant() - 1.0), 1e-12);
    EXPECT_LE(max_abs(s - CMatrix::Identity(2, 2)), 1e-15);
}

TEST(ProjectSU, HaarDrawsHaveUnitDeterminantAndAreIdempotent) {
    Rng rng(5);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 200; ++k) {
            const CMatrix s = project_su(haar_unitary(d, rng));
            ASSERT_LE(std::abs(s.determinant() - 1.0), 1e-12);
            ASSERT_LE(max_abs(project_su(s) - s), 1e-12);
        }
    }
}

TEST(ProjectSU, RejectsNonUnitary) {
    CMatrix m = CMatrix::Identity(2, 2);
    m(0, 1) = 0.1;
    EXPECT_THROW(project_su(m), ContractViolation);
}

TEST(PolarDecompose, MaximallyEntangledQubits) {
    const CMatrix m = CMatrix::Identity(2, 2) / std::sqrt(2.0);
    const auto polar = polar_decompose(m);
    EXPECT_LE(max_abs(polar.hermitian - m), 1e-15);
    EXPECT_LE(max_abs(polar.unitary - CMatrix::Identity(2, 2)), 1e-15);
}

TEST(PolarDecompose, PositiveDiagonalIsItsOwnHermitianFactor) {
    const double a = 7 * kPi / 36;
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::cos(a);
    m(1, 1) = std::sin(a);
    const auto polar = polar_decompose(m);
    EXPECT_LE(max_abs(polar.hermitian - m), 1e-15);
    EXPECT_LE(max_abs(polar.unitary - CMatrix::Identity(2, 2)), 1e-15);
}

TEST(PolarDecompose, RandomReconstructionAndSpectrum) {
    Rng rng(77);
    for (int k = 0; k < 1000; ++k) {
        const int d = 2 + k % 4;
        CMatrix m(d, d);
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) {
                const double re = rng.normal();
                m(i, j) = Complex(re, rng.normal());
            }
        }
        const auto polar = polar_decompose(m);
        ASSERT_LE(max_abs(m - polar.hermitian * polar.unitary), 1e-10);
        ASSERT_TRUE(is_hermitian(polar.hermitian, 1e-12));
        ASSERT_LE(unitarity_error(polar.unitary), 1e-12);
        // Oracle: Q^2 must equal M M^dagger, whose eigenvalues are nonnegative.
        ASSERT_LE(max_abs(polar.hermitian * polar.hermitian - m * m.adjoint()), 1e-10);
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(polar.hermitian);
        ASSERT_GE(eig.eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(PolarDecompose, RejectsSingular) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    EXPECT_THROW(polar_decompose(m), SingularCoefficientMatrix);
}

TEST(Eigenphases, Identity) {
    const auto cfg = eigenphases(CMatrix::Identity(3, 3));
    ASSERT_EQ(cfg.phases.size(), 3U);
    for (double p : cfg.phases) {
        EXPECT_NEAR(p, 0.0, 1e-15);
    }
}

TEST(Eigenphases, DiagonalSortedAscending) {
    const auto cfg = eigenphases(diag_phases({kPi / 3, kPi / 3, -2 * kPi / 3}));
    ASSERT_EQ(cfg.phases.size(), 3U);
    EXPECT_NEAR(cfg.phases[0], -2 * kPi / 3, 1e-12);
    EXPECT_NEAR(cfg.phases[1], kPi / 3, 1e-12);
    EXPECT_NEAR(cfg.phases[2], kPi / 3, 1e-12);
    EXPECT_NEAR(cfg.sum(), 0.0, 1e-12);
}

TEST(Eigenphases, SumIsZeroOnlyModuloTwoPi) {
    const auto cfg = eigenphases(diag_phases({2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}));
    EXPECT_NEAR(cfg.sum(), kTwoPi, 1e-12);
    EXPECT_TRUE(cfg.balanced(1e-9));
}

TEST(Eigenphases, RejectsNonSpecial) {
    EXPECT_THROW(eigenphases(diag_phases({0.3, 0.3})), ContractViolation);
}

TEST(Eigenphases, InvariantUnderPermutationConjugation) {
    Rng rng(31);
    for (int k = 0; k < 300; ++k) {
        const int d = 2 + k % 4;
        const CMatrix s = project_su(haar_unitary(d, rng));
        const CMatrix p = random_permutation(d, rng);
        const auto a = eigenphases(s);
        const auto b = eigenphases(p * s * p.adjoint());
        ASSERT_TRUE(a.balanced());
        ASSERT_EQ(a.phases.size(), b.phases.size());
        for (std::size_t j = 0; j < a.phases.size(); ++j) {
            // Sorted multisets; a phase sitting at the +-pi cut could swap ends.
            ASSERT_LE(distance_to_multiple_of_two_pi(a.phases[j] - b.phases[j]), 1e-9);
        }
    }
}

TEST(Kron, MatchesIndexConvention) {
    Rng rng(3);
    const CMatrix a = haar_unitary(2, rng);
    const CMatrix b = haar_unitary(3, rng);
    const CMatrix k = kron(a, b);
    EXPECT_EQ(k(1 * 3 + 2, 0 * 3 + 1), a(1, 0) * b(2, 1));
}
