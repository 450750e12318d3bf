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

// Minimal self-contained SVG output for complex-plane scatter plots and polar
// histograms. No timestamps or external assets are embedded.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <utility>
#include <string>
#include <vector>

#include "qbl/io.hpp"
#include "qbl/linalg.hpp"

namespace qbl::svg {

inline constexpr double kSize = 480.0;
inline constexpr double kExtent = 1.15;  // plotted half-width in overlap units

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

struct Layer {
    std::vector<Complex> points;
    std::string color;
    bool closed_line = false;  // polyline through points; dots otherwise
    double width = 1.5;
};

class ComplexPlanePlot {
  public:
    explicit ComplexPlanePlot(std::string title) : title_(std::move(title)) {}

    void add_curve(std::vector<Complex> points, std::string color, double width = 1.5) {
        layers_.push_back({std::move(points), std::move(color), true, width});
    }

    void add_points(std::vector<Complex> points, std::string color, double radius = 1.2) {
        layers_.push_back({std::move(points), std::move(color), false, radius});
    }

    std::string render() const {
        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
               "\" viewBox=\"0 0 " + num(kSize) + ' ' + num(kSize) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += "<text x=\"" + num(kSize / 2) + "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\">" + title_ + "</text>\n";
        const auto [x0, y0] = map({-kExtent, 0.0});
        const auto [x1, y1] = map({kExtent, 0.0});
        const auto [xa, ya] = map({0.0, -kExtent});
        const auto [xb, yb] = map({0.0, kExtent});
        out += line(x0, y0, x1, y1, "#999999");
        out += line(xa, ya, xb, yb, "#999999");
        out += "<text x=\"" + num(x1 - 14) + "\" y=\"" + num(y1 - 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">Re</text>\n";
        out += "<text x=\"" + num(xb + 4) + "\" y=\"" + num(yb + 12) +
               "\" font-family=\"sans-serif\" font-size=\"11\">Im</text>\n";
        // Unit circle reference.
        const auto [cx, cy] = map({0.0, 0.0});
        out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(scale()) +
               "\" fill=\"none\" stroke=\"green\" stroke-width=\"1\"/>\n";
        for (const auto &layer : layers_) {
            if (layer.closed_line) {
                out += "<polyline fill=\"none\" stroke=\"" + layer.color + "\" stroke-width=\"" + num(layer.width) +
                       "\" points=\"";
                for (const auto &p : layer.points) {
                    const auto [x, y] = map(p);
                    out += num(x) + ',' + num(y) + ' ';
                }
                out += "\"/>\n";
            } else {
                out += "<g fill=\"" + layer.color + "\">\n";
                for (const auto &p : layer.points) {
                    const auto [x, y] = map(p);
                    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(layer.width) + "\"/>\n";
                }
                out += "</g>\n";
            }
        }
        out += "</svg>\n";
        return out;
    }

  private:
    static double scale() { return (kSize / 2 - 24) / kExtent; }

    static std::pair<double, double> map(Complex z) {
        return {kSize / 2 + scale() * z.real(), kSize / 2 - scale() * z.imag()};
    }

    static std::string line(double x0, double y0, double x1, double y1, const char *color) {
        return "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
               "\" stroke=\"" + color + "\" stroke-width=\"0.8\"/>\n";
    }

    std::string title_;
    std::vector<Layer> layers_;
};

/// Boundary curve as complex points r_max e^{i Phi}, closed.
inline std::vector<Complex> curve_points(const BoundaryCurve &curve) {
    std::vector<Complex> pts;
    pts.reserve(curve.points.size() + 1);
    for (const auto &p : curve.points) {
        pts.push_back(std::polar(p.r_max, p.Phi));
    }
    if (!pts.empty()) {
        pts.push_back(pts.front());
    }
    return pts;
}

/// Polar histogram drawn as a fan of wedges, radius proportional to count.
inline std::string polar_histogram(const std::vector<HistogramBin> &bins, const std::string &title,
                                   bool degree_labels = false) {
    std::size_t peak = 1;
    for (const auto &b : bins) {
        peak = std::max(peak, b.count);
    }
    const double c = kSize / 2;
    const double rmax = kSize / 2 - 36;
    const double half = bins.empty() ? 0.0 : kPi / static_cast<double>(bins.size());
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
           "\" viewBox=\"0 0 " + num(kSize) + ' ' + num(kSize) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(c) + "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           title + "</text>\n";
    for (int ring = 1; ring <= 4; ++ring) {
        out += "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(rmax * ring / 4.0) +
               "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.8\"/>\n";
    }
    for (const auto &b : bins) {
        if (b.count == 0) {
            continue;
        }
        const double r = rmax * static_cast<double>(b.count) / static_cast<double>(peak);
        const double a0 = b.center - half;
        const double a1 = b.center + half;
        out += "<path fill=\"steelblue\" fill-opacity=\"0.75\" stroke=\"navy\" stroke-width=\"0.5\" d=\"M " + num(c) +
               ' ' + num(c) + " L " + num(c + r * std::cos(a0)) + ' ' + num(c - r * std::sin(a0)) + " A " + num(r) +
               ' ' + num(r) + " 0 0 0 " + num(c + r * std::cos(a1)) + ' ' + num(c - r * std::sin(a1)) + " Z\"/>\n";
    }
    for (int k = 0; k < 4; ++k) {
        const double a = k * kPi / 2;
        const std::string label = degree_labels ? std::to_string(k * 90) + "°"
                                                : (k == 0 ? "0" : k == 1 ? "π/2" : k == 2 ? "π" : "-π/2");
        out += "<text x=\"" + num(c + (rmax + 16) * std::cos(a)) + "\" y=\"" + num(c - (rmax + 16) * std::sin(a) + 4) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace qbl::svg
