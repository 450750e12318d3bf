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

// Fixed CSV/JSON schemas for curves, samples, histograms and empirical
// envelopes. Every CSV starts with a version comment line. Numbers use the
// shortest round-trip representation, so identical inputs give identical
// bytes.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbl/boundary.hpp"
#include "qbl/oracle.hpp"
#include "qbl/sweep.hpp"

namespace qbl {

inline constexpr const char *kVersion = "0.1.0";

inline std::string csv_version_line() { return std::string("# qudit-bound-lab v") + kVersion + "\n"; }

/// Shortest round-trip decimal form; NaN becomes an empty field.
inline std::string format_number(double x) {
    if (std::isnan(x)) {
        return "";
    }
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

inline nlohmann::json json_number(double x) {
    if (std::isnan(x)) {
        return nullptr;
    }
    return x;
}

inline std::string boundary_csv(const BoundaryCurve &curve) {
    std::string out = csv_version_line();
    out += "phi,r_max,Phi,theta,Lambda,branch\n";
    for (const auto &p : curve.points) {
        out += format_number(p.phi) + ',' + format_number(p.r_max) + ',' + format_number(p.Phi) + ',' +
               format_number(p.theta) + ',' + format_number(p.Lambda) + ',' + std::to_string(p.branch) + '\n';
    }
    return out;
}

inline nlohmann::json boundary_json(const BoundaryCurve &curve) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["d"] = curve.d;
    j["concurrence"] = curve.concurrence ? nlohmann::json(*curve.concurrence) : nlohmann::json(nullptr);
    auto &points = j["points"] = nlohmann::json::array();
    for (const auto &p : curve.points) {
        points.push_back({{"phi", p.phi},
                          {"r_max", p.r_max},
                          {"Phi", p.Phi},
                          {"theta", json_number(p.theta)},
                          {"Lambda", json_number(p.Lambda)},
                          {"branch", p.branch}});
    }
    return j;
}

/// Sample rows: index,re,im,r,phi. Extra named columns may follow.
inline std::string samples_csv(const std::vector<OverlapSample> &samples,
                               const std::vector<std::pair<std::string, std::vector<double>>> &extra = {}) {
    std::string out = csv_version_line();
    out += "index,re,im,r,phi";
    for (const auto &col : extra) {
        out += ',' + col.first;
    }
    out += '\n';
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto &s = samples[k];
        out += std::to_string(s.index) + ',' + format_number(s.O.real()) + ',' + format_number(s.O.imag()) + ',' +
               format_number(s.R) + ',' + format_number(s.Phi);
        for (const auto &col : extra) {
            out += ',' + format_number(col.second.at(k));
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::json samples_json(const std::vector<OverlapSample> &samples,
                                   const std::vector<std::pair<std::string, std::vector<double>>> &extra = {}) {
    nlohmann::json j;
    j["version"] = kVersion;
    auto &rows = j["samples"] = nlohmann::json::array();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto &s = samples[k];
        nlohmann::json row = {{"index", s.index},
                              {"re", s.O.real()},
                              {"im", s.O.imag()},
                              {"r", s.R},
                              {"phi", s.Phi},
                              {"strategy", std::string(to_string(s.strategy))},
                              {"seed", s.seed}};
        for (const auto &col : extra) {
            row[col.first] = json_number(col.second.at(k));
        }
        rows.push_back(std::move(row));
    }
    return j;
}

inline std::string histogram_csv(const std::vector<HistogramBin> &bins) {
    std::string out = csv_version_line();
    out += "bin_center,count\n";
    for (const auto &b : bins) {
        out += format_number(b.center) + ',' + std::to_string(b.count) + '\n';
    }
    return out;
}

inline nlohmann::json histogram_json(const std::vector<HistogramBin> &bins) {
    nlohmann::json j;
    j["version"] = kVersion;
    auto &rows = j["bins"] = nlohmann::json::array();
    for (const auto &b : bins) {
        rows.push_back({{"bin_center", b.center}, {"count", b.count}});
    }
    return j;
}

/// Envelope rows: Phi,max_R,phase_1..phase_d. Empty bins keep their row with
/// empty value fields.
inline std::string empirical_csv(const EmpiricalBoundary &envelope) {
    std::string out = csv_version_line();
    out += "Phi,max_R";
    for (int k = 1; k <= envelope.d; ++k) {
        out += ",phase_" + std::to_string(k);
    }
    out += '\n';
    for (const auto &bin : envelope.bins) {
        out += format_number(bin.center) + ',';
        if (bin.count > 0) {
            out += format_number(bin.max_r);
            for (double p : bin.argmax.phases) {
                out += ',' + format_number(p);
            }
        } else {
            out += std::string(static_cast<std::size_t>(envelope.d), ',');
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::json empirical_json(const EmpiricalBoundary &envelope) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["d"] = envelope.d;
    j["grid_steps"] = envelope.grid_steps;
    j["random_samples"] = envelope.random_samples;
    j["evaluated"] = envelope.evaluated;
    auto &rows = j["bins"] = nlohmann::json::array();
    for (const auto &bin : envelope.bins) {
        nlohmann::json row = {{"Phi", bin.center}, {"count", bin.count}};
        if (bin.count > 0) {
            row["max_R"] = bin.max_r;
            row["phases"] = bin.argmax.phases;
        } else {
            row["max_R"] = nullptr;
            row["phases"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return j;
}

inline nlohmann::json confinement_json(const ConfinementReport &report, double tol) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["total"] = report.total;
    j["tol"] = tol;
    j["confined"] = report.confined();
    j["max_excess"] = report.max_excess;
    auto &rows = j["violations"] = nlohmann::json::array();
    for (const auto &v : report.violations) {
        rows.push_back({{"index", v.index}, {"re", v.O.real()}, {"im", v.O.imag()}, {"excess", v.excess}});
    }
    return j;
}

inline nlohmann::json gap_json(const GapReport &report) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["d"] = report.d;
    j["max_gap"] = report.max_gap;
    j["max_sup_gap"] = report.max_sup_gap;
    j["evaluated_bins"] = report.evaluated_bins;
    j["soundness_violations"] = report.soundness_violations;
    j["worst_soundness"] = report.worst_soundness;
    auto &rows = j["bins"] = nlohmann::json::array();
    for (const auto &b : report.bins) {
        rows.push_back({{"Phi", b.center},
                        {"analytic_sup", b.analytic_sup},
                        {"gap", b.gap ? nlohmann::json(*b.gap) : nlohmann::json(nullptr)},
                        {"sup_gap", b.sup_gap ? nlohmann::json(*b.sup_gap) : nlohmann::json(nullptr)}});
    }
    return j;
}

}  // namespace qbl
