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

// Monte Carlo sweeps: random local evolutions of a Schmidt-form initial state,
// recorded as overlap samples, checked against the analytic boundary and
// binned into phase histograms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbl/boundary.hpp"
#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"
#include "qbl/parallel.hpp"
#include "qbl/phase_bins.hpp"
#include "qbl/rng.hpp"
#include "qbl/state.hpp"

namespace qbl {

enum class Strategy {
    HaarTwoSided,  // (Haar SU(d), Haar SU(d))
    HaarOneSided,  // (Haar SU(d), 1)
    RxRz,          // (R_x(theta) R_z(beta), 1), qubits only
};

inline std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::HaarTwoSided:
        return "haar-two-sided";
    case Strategy::HaarOneSided:
        return "haar-one-sided";
    case Strategy::RxRz:
        return "rxrz";
    }
    return "unknown";
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
    for (auto s : {Strategy::HaarTwoSided, Strategy::HaarOneSided, Strategy::RxRz}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

struct SweepConfig {
    int d = 2;
    SchmidtSpec schmidt = SchmidtSpec::maximally_entangled(2);
    Strategy strategy = Strategy::HaarTwoSided;
    std::size_t n_samples = 1;
    std::uint64_t seed = 0;
    double tol = kDefaultMembershipTol;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const {
        schmidt.validate();
        require(schmidt.d == d, "SweepConfig: Schmidt spec dimension differs from d");
        require(n_samples >= 1, "SweepConfig: n_samples must be positive");
        require(tol >= 0.0, "SweepConfig: tolerance must be nonnegative");
        if (strategy == Strategy::RxRz && d != 2) {
            throw UnsupportedDimension("SweepConfig: strategy rxrz requires d = 2");
        }
    }
};

struct OverlapSample {
    Complex O;
    double R = 0.0;
    double Phi = 0.0;  // (-pi, pi]
    std::size_t index = 0;
    Strategy strategy = Strategy::HaarTwoSided;
    std::uint64_t seed = 0;

    static OverlapSample make(Complex o, std::size_t index, Strategy strategy, std::uint64_t seed) {
        return OverlapSample{o, std::abs(o), canonical_angle(std::arg(o)), index, strategy, seed};
    }
};

/// exp(-i theta sigma_x / 2)
inline CMatrix rx(double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    CMatrix m(2, 2);
    m << Complex(c, 0.0), Complex(0.0, -s), Complex(0.0, -s), Complex(c, 0.0);
    return m;
}

/// exp(-i beta sigma_z / 2)
inline CMatrix rz(double beta) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -0.5 * beta);
    m(1, 1) = std::polar(1.0, 0.5 * beta);
    return m;
}

inline CMatrix rxrz(double theta, double beta) { return rx(theta) * rz(beta); }

struct LocalPair {
    CMatrix u_a;
    CMatrix u_b;
};

inline constexpr double kRxRzAngleRange = 2.0 * kTwoPi;  // angles drawn from [0, 4 pi)

/// Local unitaries for sample k. Each sample owns the RNG substream
/// (seed, k), so the pair depends only on (seed, k).
inline LocalPair sample_unitaries(const SweepConfig &config, std::size_t k) {
    require(k < config.n_samples, "sample_unitaries: sample index out of range");
    if (config.strategy == Strategy::RxRz && config.d != 2) {
        throw UnsupportedDimension("sample_unitaries: strategy rxrz requires d = 2");
    }
    Rng rng(config.seed, k);
    const int d = config.d;
    switch (config.strategy) {
    case Strategy::HaarTwoSided: {
        CMatrix a = project_su(haar_unitary(d, rng));
        CMatrix b = project_su(haar_unitary(d, rng));
        return {std::move(a), std::move(b)};
    }
    case Strategy::HaarOneSided:
        return {project_su(haar_unitary(d, rng)), CMatrix::Identity(d, d)};
    case Strategy::RxRz: {
        const double theta = rng.uniform(0.0, kRxRzAngleRange);
        const double beta = rng.uniform(0.0, kRxRzAngleRange);
        return {rxrz(theta, beta), CMatrix::Identity(2, 2)};
    }
    }
    throw ContractViolation("sample_unitaries: unknown strategy");
}

inline constexpr std::size_t kSweepBlockSize = 256;

/// Samples come back in index order; worker count does not affect the values.
inline std::vector<OverlapSample> run_sweep(const SweepConfig &config) {
    config.validate();
    const TwoQuditState initial = from_schmidt(config.schmidt);
    std::vector<OverlapSample> samples(config.n_samples);
    const std::size_t n_blocks = (config.n_samples + kSweepBlockSize - 1) / kSweepBlockSize;
    parallel_for_blocks(n_blocks, config.threads, [&](std::size_t block) {
        const std::size_t begin = block * kSweepBlockSize;
        const std::size_t end = std::min(config.n_samples, begin + kSweepBlockSize);
        for (std::size_t k = begin; k < end; ++k) {
            const LocalPair pair = sample_unitaries(config, k);
            const TwoQuditState evolved = evolve_local(initial, pair.u_a, pair.u_b);
            samples[k] = OverlapSample::make(overlap(initial, evolved), k, config.strategy, config.seed);
        }
    });
    return samples;
}

struct ConfinementViolation {
    std::size_t index = 0;
    Complex O;
    double excess = 0.0;
};

struct ConfinementReport {
    std::size_t total = 0;
    std::vector<ConfinementViolation> violations;
    double max_excess = 0.0;  // over violations only; 0 when there are none

    bool confined() const { return violations.empty(); }
};

/// Confinement against the qudit boundary of dimension d, or the qubit
/// boundary of concurrence c when given.
inline ConfinementReport check_confinement(const std::vector<OverlapSample> &samples, int d,
                                           std::optional<double> c = std::nullopt,
                                           double tol = kDefaultMembershipTol) {
    require(!samples.empty(), "check_confinement: no samples");
    const BoundaryIndex index = BoundaryIndex::make(d, c);
    ConfinementReport report;
    report.total = samples.size();
    for (const auto &s : samples) {
        const double excess = index.excess(s.O);
        if (excess > tol) {
            report.violations.push_back({s.index, s.O, excess});
            report.max_excess = std::max(report.max_excess, excess);
        }
    }
    return report;
}

struct HistogramBin {
    double center = 0.0;
    std::size_t count = 0;
};

inline std::vector<HistogramBin> phase_histogram(const std::vector<OverlapSample> &samples, std::size_t n_bins = 36) {
    const PhaseBinning bins(n_bins);
    std::vector<HistogramBin> out(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k) {
        out[k].center = bins.center(k);
    }
    for (const auto &s : samples) {
        ++out[bins.index(s.Phi)].count;
    }
    return out;
}

/// Largest |O| observed per phase bin; empty bins report nullopt. Lets one
/// inspect how closely a sampling strategy approaches the boundary.
inline std::vector<std::optional<double>> max_modulus_per_bin(const std::vector<OverlapSample> &samples,
                                                              std::size_t n_bins = 36) {
    const PhaseBinning bins(n_bins);
    std::vector<std::optional<double>> out(n_bins);
    for (const auto &s : samples) {
        auto &slot = out[bins.index(s.Phi)];
        slot = std::max(slot.value_or(0.0), s.R);
    }
    return out;
}

}  // namespace qbl
