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

// Brute-force check of the analytic boundary. The overlap of a special
// unitary with eigenphases {phi_j} is O = (1/d) sum_j exp(i phi_j), so the
// largest |O| per phase bin over a grid of eigenphase configurations with
// sum phi_j = 0 (mod 2 pi) is an empirical lower envelope of R_max. Taking
// the bin phase as arg O satisfies the imaginary-part constraint implicitly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbl/boundary.hpp"
#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"
#include "qbl/parallel.hpp"
#include "qbl/phase_bins.hpp"
#include "qbl/rng.hpp"

namespace qbl {

inline constexpr std::size_t kMinOracleSteps = 64;
inline constexpr std::size_t kMaxOracleStepsD4 = 256;
inline constexpr std::size_t kDefaultRandomConfigsD4 = 10'000'000;

struct OracleOptions {
    std::size_t steps_per_axis = 1024;
    std::size_t n_bins = 360;
    /// Extra uniformly random configurations; only used for d = 4, where the
    /// grid is capped at kMaxOracleStepsD4 per axis.
    std::size_t random_samples = kDefaultRandomConfigsD4;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct EmpiricalBin {
    double center = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t count = 0;
    double max_r = 0.0;
    Complex argmax_overlap;
    EigenphaseConfig argmax;
};

struct EmpiricalBoundary {
    int d = 0;
    std::size_t grid_steps = 0;  // per axis, after any cap
    std::size_t random_samples = 0;
    std::size_t evaluated = 0;   // configurations visited
    std::vector<EmpiricalBin> bins;
};

/// (1/d) sum_j exp(i phi_j)
inline Complex overlap_of_phases(const std::vector<double> &phases) {
    Complex sum(0.0, 0.0);
    for (double p : phases) {
        sum += std::polar(1.0, p);
    }
    return sum / static_cast<double>(phases.size());
}

namespace detail {

struct BinAccumulator {
    std::size_t count = 0;
    double max_r = -1.0;
    Complex o;
    std::vector<double> phases;
};

class EnvelopeAccumulator {
  public:
    EnvelopeAccumulator(const PhaseBinning &bins) : bins_(bins), acc_(bins.n_bins) {}

    void add(Complex o, const double *phases, int d) {
        const double r = std::abs(o);
        auto &slot = acc_[bins_.index(std::arg(o))];
        ++slot.count;
        if (r > slot.max_r) {
            slot.max_r = r;
            slot.o = o;
            slot.phases.assign(phases, phases + d);
        }
    }

    /// Later blocks only replace earlier maxima when strictly larger.
    void merge(const EnvelopeAccumulator &other) {
        for (std::size_t b = 0; b < acc_.size(); ++b) {
            const auto &src = other.acc_[b];
            auto &dst = acc_[b];
            dst.count += src.count;
            if (src.count > 0 && src.max_r > dst.max_r) {
                dst.max_r = src.max_r;
                dst.o = src.o;
                dst.phases = src.phases;
            }
        }
    }

    const std::vector<BinAccumulator> &bins() const { return acc_; }

  private:
    PhaseBinning bins_;
    std::vector<BinAccumulator> acc_;
};

}  // namespace detail

inline EmpiricalBoundary grid_max_overlap(int d, const OracleOptions &options) {
    require(d >= 2, "grid_max_overlap: d must be at least 2");
    if (d > 4) {
        throw UnsupportedDimension("grid_max_overlap: exhaustive grids are limited to d <= 4 (got d = " +
                                   std::to_string(d) + "); use a sampled search for larger d");
    }
    require(options.steps_per_axis >= kMinOracleSteps, "grid_max_overlap: steps_per_axis must be at least 64");
    const PhaseBinning binning(options.n_bins);

    const std::size_t steps = d == 4 ? std::min(options.steps_per_axis, kMaxOracleStepsD4) : options.steps_per_axis;
    const std::size_t random_samples = d == 4 ? options.random_samples : 0;
    const double step = kTwoPi / static_cast<double>(steps);
    std::vector<double> angle(steps);
    std::vector<Complex> phasor(steps);
    // Exactly symmetric under k -> steps - k, so a configuration and its
    // negation give conjugate overlaps bit for bit (real ones stay real).
    for (std::size_t k = 0; k <= steps / 2; ++k) {
        angle[k] = canonical_angle(step * static_cast<double>(k));
        phasor[k] = std::polar(1.0, angle[k]);
    }
    for (std::size_t k = steps / 2 + 1; k < steps; ++k) {
        angle[k] = -angle[steps - k];
        phasor[k] = std::conj(phasor[steps - k]);
    }

    // Free axes 0 .. d-2; the last eigenphase closes the sum to 0 mod 2 pi,
    // which on this grid is again a grid angle.
    const int free_axes = d - 1;
    std::size_t inner = 1;
    for (int a = 1; a < free_axes; ++a) {
        inner *= steps;
    }
    const std::size_t grid_blocks = std::min<std::size_t>(steps, 64);
    constexpr std::size_t kRandomBlock = 1 << 16;
    const std::size_t random_blocks = (random_samples + kRandomBlock - 1) / kRandomBlock;

    std::vector<detail::EnvelopeAccumulator> partial(grid_blocks + random_blocks, detail::EnvelopeAccumulator(binning));
    const double inv_d = 1.0 / d;

    parallel_for_blocks(grid_blocks + random_blocks, options.threads, [&](std::size_t block) {
        auto &acc = partial[block];
        std::vector<double> phases(static_cast<std::size_t>(d));
        std::vector<std::size_t> idx(static_cast<std::size_t>(free_axes));
        if (block < grid_blocks) {
            const std::size_t first = block * steps / grid_blocks;
            const std::size_t last = (block + 1) * steps / grid_blocks;
            for (std::size_t i0 = first; i0 < last; ++i0) {
                for (std::size_t r = 0; r < inner; ++r) {
                    idx[0] = i0;
                    std::size_t rest = r;
                    for (int a = free_axes - 1; a >= 1; --a) {
                        idx[static_cast<std::size_t>(a)] = rest % steps;
                        rest /= steps;
                    }
                    std::size_t total = 0;
                    Complex sum(0.0, 0.0);
                    for (int a = 0; a < free_axes; ++a) {
                        const std::size_t k = idx[static_cast<std::size_t>(a)];
                        total += k;
                        sum += phasor[k];
                        phases[static_cast<std::size_t>(a)] = angle[k];
                    }
                    const std::size_t closing = (steps - total % steps) % steps;
                    sum += phasor[closing];
                    phases[static_cast<std::size_t>(d - 1)] = angle[closing];
                    acc.add(sum * inv_d, phases.data(), d);
                }
            }
        } else {
            const std::size_t rb = block - grid_blocks;
            const std::size_t first = rb * kRandomBlock;
            const std::size_t last = std::min(random_samples, first + kRandomBlock);
            Rng rng(options.seed, rb);
            for (std::size_t s = first; s < last; ++s) {
                double total = 0.0;
                for (int a = 0; a < free_axes; ++a) {
                    const double p = rng.uniform(0.0, kTwoPi);
                    total += p;
                    phases[static_cast<std::size_t>(a)] = canonical_angle(p);
                }
                phases[static_cast<std::size_t>(d - 1)] = canonical_angle(-total);
                acc.add(overlap_of_phases(phases), phases.data(), d);
            }
        }
    });

    detail::EnvelopeAccumulator merged(binning);
    for (const auto &p : partial) {
        merged.merge(p);
    }

    EmpiricalBoundary out;
    out.d = d;
    out.grid_steps = steps;
    out.random_samples = random_samples;
    out.evaluated = random_samples;
    std::size_t grid_points = 1;
    for (int a = 0; a < free_axes; ++a) {
        grid_points *= steps;
    }
    out.evaluated += grid_points;
    out.bins.resize(binning.n_bins);
    for (std::size_t b = 0; b < binning.n_bins; ++b) {
        const auto &src = merged.bins()[b];
        auto &bin = out.bins[b];
        bin.center = binning.center(b);
        bin.lower = binning.lower(b);
        bin.upper = binning.upper(b);
        bin.count = src.count;
        if (src.count > 0) {
            bin.max_r = src.max_r;
            bin.argmax_overlap = src.o;
            bin.argmax.d = d;
            bin.argmax.phases = src.phases;
            std::sort(bin.argmax.phases.begin(), bin.argmax.phases.end());
        }
    }
    return out;
}

inline EmpiricalBoundary grid_max_overlap(int d, std::size_t steps_per_axis, std::size_t n_bins) {
    OracleOptions options;
    options.steps_per_axis = steps_per_axis;
    options.n_bins = n_bins;
    return grid_max_overlap(d, options);
}

struct BinGap {
    double center = 0.0;
    /// R_max(arg O*) - |O*| for the bin's best configuration O*; nullopt for
    /// empty bins. Negative values mean the configuration beat the curve.
    std::optional<double> gap;
    /// sup of R_max over the bin's phase interval minus |O*|; also counts how
    /// much of the boundary's variation inside the bin the grid missed.
    std::optional<double> sup_gap;
    double analytic_sup = 0.0;
};

struct GapReport {
    int d = 0;
    double max_gap = 0.0;
    double max_sup_gap = 0.0;
    std::size_t evaluated_bins = 0;
    std::size_t soundness_violations = 0;
    double worst_soundness = 0.0;  // largest amount by which an empirical value beat the analytic one
    std::vector<BinGap> bins;

    bool sound() const { return soundness_violations == 0; }
};

/// Compares the empirical envelope with the analytic boundary bin by bin.
/// R_max(Phi) can vary steeply inside a bin (it has corners at the
/// topological phases), so the best configuration of each bin is compared
/// with R_max at its own phase. A bin is unsound if that configuration lies
/// outside the region, or if it exceeds the supremum of R_max over the bin.
inline GapReport compare_boundaries(const EmpiricalBoundary &empirical, const BoundaryIndex &analytic,
                                    double tol = kDefaultMembershipTol) {
    require(empirical.d == analytic.d(), "compare_boundaries: dimension mismatch");
    GapReport report;
    report.d = empirical.d;
    report.bins.reserve(empirical.bins.size());
    for (const auto &bin : empirical.bins) {
        BinGap g;
        g.center = bin.center;
        g.analytic_sup = analytic.sup_over(bin.lower, bin.upper);
        if (bin.count > 0) {
            const Complex o = bin.argmax_overlap;
            const double excess = analytic.excess(o);
            // Inside the region the radial slack is the gap; outside, minus the excess.
            g.gap = excess > 0.0 ? -excess : analytic.r_max(std::arg(o)) - bin.max_r;
            if (analytic.degenerate() && excess <= tol) {
                g.gap = std::max(0.0, 1.0 - std::abs(o.real()));
            }
            g.sup_gap = g.analytic_sup - bin.max_r;
            ++report.evaluated_bins;
            report.max_gap = std::max(report.max_gap, *g.gap);
            report.max_sup_gap = std::max(report.max_sup_gap, *g.sup_gap);
            const double beat = std::max(-*g.gap, -*g.sup_gap);
            if (beat > tol) {
                ++report.soundness_violations;
            }
            report.worst_soundness = std::max(report.worst_soundness, beat);
        }
        report.bins.push_back(g);
    }
    return report;
}

/// Eigenphases of the analytic maximizer: phi repeated d - 1 times and
/// (1 - d) phi once.
inline std::vector<double> extremal_configuration(int d, double phi) {
    require(d >= 2, "extremal_configuration: d must be at least 2");
    std::vector<double> phases(static_cast<std::size_t>(d - 1), phi);
    phases.push_back((1.0 - d) * phi);
    return phases;
}

struct StationarityResidual {
    double repeated = 0.0;  // at phi_k = phi
    double opposed = 0.0;   // at phi_k = (1 - d) phi

    double max() const { return std::max(repeated, opposed); }
};

/// Residual of (1/d) sin(Phi + theta - phi_k) = Lambda for both eigenphase
/// groups of the extremal configuration, with Phi, theta, Lambda from the
/// closed form.
inline StationarityResidual stationarity_residual(int d, double phi) {
    const BoundaryPoint p = boundary_point(d, phi);
    const auto residual = [&](double phi_k) { return std::abs(std::sin(p.Phi + p.theta - phi_k) / d - p.Lambda); };
    return {residual(phi), residual((1.0 - d) * phi)};
}

inline bool verify_stationarity(int d, double phi, double tol = kDefaultMembershipTol) {
    return stationarity_residual(d, phi).max() <= tol;
}

}  // namespace qbl
