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

// Equal-width phase bins partitioning (-pi, pi]. Bin k covers
// [-pi + k w, -pi + (k + 1) w); a phase of exactly pi lands in the last bin.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "qbl/errors.hpp"
#include "qbl/linalg.hpp"

namespace qbl {

struct PhaseBinning {
    std::size_t n_bins = 36;

    explicit PhaseBinning(std::size_t n) : n_bins(n) { require(n >= 2, "phase binning needs at least 2 bins"); }

    double width() const { return kTwoPi / static_cast<double>(n_bins); }
    double lower(std::size_t k) const { return -kPi + width() * static_cast<double>(k); }
    double upper(std::size_t k) const { return k + 1 == n_bins ? kPi : -kPi + width() * static_cast<double>(k + 1); }
    double center(std::size_t k) const { return -kPi + width() * (static_cast<double>(k) + 0.5); }

    std::size_t index(double phase) const {
        const double p = canonical_angle(phase);
        const double raw = std::floor((p + kPi) / width());
        if (raw <= 0.0) {
            return 0;
        }
        return std::min(static_cast<std::size_t>(raw), n_bins - 1);
    }
};

}  // namespace qbl
