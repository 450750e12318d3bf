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

// Closed-form boundary of the region of attainable overlaps <psi(0)|psi(t)>
// under local SU(d) x SU(d) evolution.
//
// Maximally entangled qudits: the extremal eigenphase configuration has d - 1
// eigenphases equal to phi and the last one equal to (1 - d) phi, giving
//
//   R_max  = sqrt(1 - 4 (d - 1) / d^2 sin^2(d phi / 2))
//   Phi    = phi + arg(d - 1 + exp(-i d phi))
//   theta  = pi / 2 - Phi - (d - 2) phi / 2
//   Lambda = cos(d phi / 2) / d
//
// where theta and Lambda are the reparametrized Lagrange multipliers.
//
// Two qubits with concurrence C (one-sided evolution):
//
//   R_max = sqrt(1 - C^2 sin^2 phi),   Phi = arctan(sqrt(1 - C^2) tan phi)
//
// The region is the filled curve. For d = 2 maximally entangled (and C = 1)
// it degenerates to the segment [-1, 1] of the real axis.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"

namespace qbl {

inline constexpr double kDefaultMembershipTol = 1e-9;

struct BoundaryPoint {
    double phi = 0.0;
    double r_max = 1.0;
    double Phi = 0.0;     // unwrapped: continuous and nondecreasing in phi
    double theta = 0.0;   // NaN on qubit partial-entanglement curves
    double Lambda = 0.0;  // NaN on qubit partial-entanglement curves
    int branch = 0;
};

namespace detail {

/// Index n of the branch phi in [2 n pi / m, 2 (n + 1) pi / m), after
/// reducing phi to [0, 2 pi).
inline int branch_of(int m, double phi) {
    double t = std::fmod(phi, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    const int n = static_cast<int>(std::floor(t * m / kTwoPi));
    return std::clamp(n, 0, m - 1);
}

/// Reduces an angle to [0, 2 pi).
inline double wrap_positive(double a) {
    double t = std::fmod(a, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    if (t >= kTwoPi) {
        t = 0.0;
    }
    return t;
}

}  // namespace detail

inline double boundary_radius(int d, double phi) {
    const double dd = d;
    const double s = std::sin(0.5 * dd * phi);
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * (dd - 1.0) / (dd * dd) * s * s));
}

/// arg(d - 1 + e^{-i d phi}) always lies in [-pi/2, pi/2], so adding the
/// principal value to phi already gives a continuous Phi with Phi(0) = 0.
inline double boundary_phase(int d, double phi) {
    const double dd = d;
    return phi + std::atan2(-std::sin(dd * phi), dd - 1.0 + std::cos(dd * phi));
}

inline BoundaryPoint boundary_point(int d, double phi) {
    require(d >= 2, "boundary_point: d must be at least 2");
    BoundaryPoint p;
    p.phi = phi;
    p.r_max = boundary_radius(d, phi);
    p.Phi = boundary_phase(d, phi);
    p.theta = 0.5 * kPi - p.Phi - 0.5 * (d - 2.0) * phi;
    p.Lambda = std::cos(0.5 * d * phi) / d;
    p.branch = detail::branch_of(d, phi);
    return p;
}

struct QubitBoundaryPoint {
    double phi = 0.0;
    double r_max = 1.0;
    double Phi = 0.0;  // unwrapped
};

inline QubitBoundaryPoint qubit_boundary_point(double c, double phi) {
    require(c >= 0.0 && c <= 1.0, "qubit_boundary_point: concurrence must lie in [0, 1]");
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    QubitBoundaryPoint p;
    p.phi = phi;
    p.r_max = std::sqrt(std::max(0.0, 1.0 - c * c * sp * sp));
    // arg((cos + i s sin) e^{-i phi}) has nonnegative real part, so this is
    // the continuous branch of arctan(s tan phi).
    p.Phi = phi + std::atan2((s - 1.0) * sp * cp, cp * cp + s * sp * sp);
    return p;
}

inline std::vector<double> topological_phases(int d) {
    require(d >= 2, "topological_phases: d must be at least 2");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        out.push_back(kTwoPi * n / d);
    }
    return out;
}

struct BoundaryCurve {
    int d = 0;
    std::optional<double> concurrence;
    std::vector<BoundaryPoint> points;

    int branch_count() const {
        int count = 0;
        int last = -1;
        for (const auto &p : points) {
            if (p.branch != last) {
                ++count;
                last = p.branch;
            }
        }
        return count;
    }
};

/// n uniformly spaced samples phi_k = 2 pi k / n.
inline BoundaryCurve curve(int d, std::size_t n, std::optional<double> c = std::nullopt) {
    require(d >= 2, "curve: d must be at least 2");
    require(n >= static_cast<std::size_t>(8 * d), "curve: need at least 8 d samples");
    require(!c || d == 2, "curve: the concurrence-dependent boundary is only available for d = 2");
    BoundaryCurve out;
    out.d = d;
    out.concurrence = c;
    out.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        if (c) {
            const auto q = qubit_boundary_point(*c, phi);
            BoundaryPoint p;
            p.phi = phi;
            p.r_max = q.r_max;
            p.Phi = q.Phi;
            p.theta = std::numeric_limits<double>::quiet_NaN();
            p.Lambda = std::numeric_limits<double>::quiet_NaN();
            p.branch = detail::branch_of(2, phi);
            out.points.push_back(p);
        } else {
            out.points.push_back(boundary_point(d, phi));
        }
    }
    return out;
}

/// Result of densely sampling Phi(phi) to confirm it never decreases.
struct MonotonicityReport {
    bool monotone = true;
    double worst_step = 0.0;  // most negative Phi(phi_{k+1}) - Phi(phi_k)
    double worst_phi = 0.0;
    std::size_t samples = 0;
};

/// Membership oracle for one boundary (a qudit dimension, or a qubit
/// concurrence). R_max at a given overlap phase is found by bisecting phi on
/// the branch containing that phase; Phi(phi) is validated to be monotone
/// at construction and a dense lookup table takes over if it is not.
class BoundaryIndex {
  public:
    static BoundaryIndex qudit(int d) {
        require(d >= 2, "BoundaryIndex: d must be at least 2");
        return BoundaryIndex(d, std::nullopt);
    }

    static BoundaryIndex qubit(double c) {
        require(c >= 0.0 && c <= 1.0, "BoundaryIndex: concurrence must lie in [0, 1]");
        return BoundaryIndex(2, c);
    }

    /// Qubit boundary when a concurrence is given, qudit boundary otherwise.
    static BoundaryIndex make(int d, std::optional<double> c) {
        if (c) {
            require(d == 2, "BoundaryIndex: concurrence-dependent boundary needs d = 2");
            return qubit(*c);
        }
        return qudit(d);
    }

    int d() const { return d_; }
    std::optional<double> concurrence() const { return c_; }

    /// True when the region collapses onto the real segment [-1, 1].
    bool degenerate() const { return d_ == 2 && (!c_ || *c_ >= 1.0); }

    const MonotonicityReport &monotonicity() const { return monotonicity_; }
    bool using_fallback() const { return !fallback_.empty(); }

    double phase_at(double phi) const {
        return c_ ? qubit_boundary_point(*c_, phi).Phi : boundary_phase(d_, phi);
    }

    double radius_at(double phi) const {
        return c_ ? qubit_boundary_point(*c_, phi).r_max : boundary_radius(d_, phi);
    }

    /// Boundary radius at overlap phase `phase` (any real angle).
    double r_max(double phase) const {
        const double t = detail::wrap_positive(phase);
        if (degenerate()) {
            const double axis = std::min({t, std::abs(t - kPi), kTwoPi - t});
            return axis <= kJunctionTol ? 1.0 : 0.0;
        }
        if (using_fallback()) {
            return lookup(t);
        }
        if (c_) {
            const double s = std::sqrt(1.0 - (*c_) * (*c_));
            return radius_at(std::atan2(std::sin(t), s * std::cos(t)));
        }
        const double span = kTwoPi / d_;
        const double nearest = std::round(t / span) * span;
        if (std::abs(t - nearest) <= kJunctionTol) {
            // Junction of two branches: both adjoining branches end here.
            return radius_at(nearest);
        }
        const int n = std::min(d_ - 1, static_cast<int>(std::floor(t / span)));
        return radius_at(bisect(t, n * span, (n + 1) * span));
    }

    /// Supremum of R_max over the closed phase interval [lo, hi] (hi - lo < 2 pi).
    /// R_max only peaks at the topological phases, so endpoints plus any
    /// enclosed topological phase suffice.
    double sup_over(double lo, double hi) const {
        double best = std::max(r_max(lo), r_max(hi));
        const int m = d_;
        const double step = kTwoPi / m;
        const double first = std::ceil(lo / step - 1e-12) * step;
        if (first <= hi + 1e-12) {
            best = std::max(best, 1.0);
        }
        return best;
    }

    /// Distance by which `o` lies outside the region: radial excess
    /// max(0, |O| - R_max(arg O)); for the degenerate segment, the Euclidean
    /// distance to [-1, 1].
    double excess(Complex o) const {
        if (degenerate()) {
            return std::hypot(o.imag(), std::max(0.0, std::abs(o.real()) - 1.0));
        }
        return std::max(0.0, std::abs(o) - r_max(std::arg(o)));
    }

    bool contains(Complex o, double tol = kDefaultMembershipTol) const {
        if (std::abs(o) > 1.0 + tol) {
            throw std::out_of_range("contains: |O| exceeds 1 + tol");
        }
        return excess(o) <= tol;
    }

  private:
    static constexpr double kJunctionTol = 1e-12;
    static constexpr std::size_t kSamplesPerBranch = 2048;

    BoundaryIndex(int d, std::optional<double> c) : d_(d), c_(c) {
        validate_monotone();
        if (!monotonicity_.monotone && !degenerate()) {
            build_fallback();
        }
    }

    void validate_monotone() {
        const std::size_t n = kSamplesPerBranch * static_cast<std::size_t>(d_);
        double prev = phase_at(0.0);
        monotonicity_ = MonotonicityReport{true, 0.0, 0.0, n + 1};
        for (std::size_t k = 1; k <= n; ++k) {
            const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
            const double cur = phase_at(phi);
            const double step = cur - prev;
            if (step < monotonicity_.worst_step) {
                monotonicity_.worst_step = step;
                monotonicity_.worst_phi = phi;
            }
            prev = cur;
        }
        monotonicity_.monotone = monotonicity_.worst_step >= -1e-12;
    }

    void build_fallback() {
        const std::size_t n = 16 * kSamplesPerBranch * static_cast<std::size_t>(d_);
        fallback_.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
            fallback_.emplace_back(detail::wrap_positive(phase_at(phi)), radius_at(phi));
        }
        std::sort(fallback_.begin(), fallback_.end());
    }

    double lookup(double t) const {
        auto it = std::lower_bound(fallback_.begin(), fallback_.end(), std::make_pair(t, -1.0));
        double best = 0.0;
        if (it != fallback_.end()) {
            best = std::max(best, it->second);
        }
        if (it != fallback_.begin()) {
            best = std::max(best, std::prev(it)->second);
        }
        return best;
    }

    double bisect(double target, double lo, double hi) const {
        for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (phase_at(mid) < target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }

    int d_;
    std::optional<double> c_;
    MonotonicityReport monotonicity_;
    std::vector<std::pair<double, double>> fallback_;
};

/// Shared, lazily built qudit boundary index for dimension d.
inline std::shared_ptr<const BoundaryIndex> qudit_boundary_index(int d) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const BoundaryIndex>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[d];
    if (!slot) {
        slot = std::make_shared<const BoundaryIndex>(BoundaryIndex::qudit(d));
    }
    return slot;
}

/// Maximally entangled qudit membership test; throws std::out_of_range when
/// |O| > 1 + tol.
inline bool contains(int d, Complex o, double tol = kDefaultMembershipTol) {
    require(d >= 2, "contains: d must be at least 2");
    return qudit_boundary_index(d)->contains(o, tol);
}

}  // namespace qbl
