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


// Acceptance suite. Each criterion runs at its stated tolerance and runtime
// limit and prints one PASS/FAIL line.
//
//   acceptance [--out DIR] [criterion ...]
//
// With no criterion numbers all of them run. Exit status is 0 iff every
// selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "qbl/boundary.hpp"
#include "qbl/interferometer.hpp"
#include "qbl/oracle.hpp"
#include "qbl/state.hpp"
#include "qbl/sweep.hpp"

namespace fs = std::filesystem;
using namespace qbl;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail_if(bool bad, const std::string &why) {
        if (bad) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + why;
        }
    }
    void note(const std::string &what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // <= 0: no runtime limit
    std::function<Outcome(const fs::path &)> body;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qbl");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, false);
    if (code != 0) {
        std::fprintf(stderr, "%s%s", out.str().c_str(), err.str().c_str());
    }
    return code;
}

SweepConfig maximally_entangled_sweep(int d, std::size_t n, std::uint64_t seed) {
    SweepConfig cfg;
    cfg.d = d;
    cfg.schmidt = SchmidtSpec::maximally_entangled(d);
    cfg.strategy = Strategy::HaarTwoSided;
    cfg.n_samples = n;
    cfg.seed = seed;
    return cfg;
}

SweepConfig rxrz_sweep(double c, std::size_t n, std::uint64_t seed) {
    SweepConfig cfg;
    cfg.d = 2;
    cfg.schmidt = SchmidtSpec::from_concurrence(c);
    cfg.strategy = Strategy::RxRz;
    cfg.n_samples = n;
    cfg.seed = seed;
    return cfg;
}

Outcome topological_endpoints(const fs::path &) {
    Outcome o;
    double worst_top = 0.0;
    double worst_min = 0.0;
    double worst_phase = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const BoundaryIndex index = BoundaryIndex::qudit(d);
        for (int n = 0; n < d; ++n) {
            const double top = kTwoPi * n / d;
            const double mid = kPi * (2 * n + 1) / d;
            worst_top = std::max({worst_top, std::abs(boundary_radius(d, top) - 1.0),
                                  std::abs(index.r_max(canonical_angle(top)) - 1.0)});
            const double expected = 1.0 - 2.0 / d;
            worst_min = std::max({worst_min, std::abs(boundary_radius(d, mid) - expected),
                                  std::abs(index.r_max(canonical_angle(mid)) - expected)});
            if (d > 2) {
                // Symmetric points of a branch map to themselves (d = 2 maps them to the origin).
                worst_phase = std::max(worst_phase, distance_to_multiple_of_two_pi(boundary_phase(d, mid) - mid));
            }
        }
    }
    o.note("max |R_max(2 pi n/d) - 1| = " + sci(worst_top) + ", max |R_max((2n+1) pi/d) - (1 - 2/d)| = " +
           sci(worst_min) + ", max |Phi((2n+1) pi/d) - (2n+1) pi/d| = " + sci(worst_phase));
    o.fail_if(worst_top > 1e-12, "topological phases off unity");
    o.fail_if(worst_phase > 1e-12, "minima not at the symmetric phases");
    o.fail_if(worst_min > 1e-12, "minima off 1 - 2/d");
    return o;
}

Outcome haar_confinement(const fs::path &out) {
    Outcome o;
    for (int d = 2; d <= 4; ++d) {
        const auto samples = run_sweep(maximally_entangled_sweep(d, 10'000, 2024 + static_cast<std::uint64_t>(d)));
        const auto report = check_confinement(samples, d, std::nullopt, 1e-9);
        o.note("d=" + std::to_string(d) + ": " + std::to_string(report.violations.size()) + " violations");
        o.fail_if(!report.confined(), "d=" + std::to_string(d) + " has violations, max excess " + sci(report.max_excess));

        const fs::path dir = out / ("haar_d" + std::to_string(d));
        const int code = cli({"sweep", "--d", std::to_string(d), "--n", "10000", "--seed",
                              std::to_string(2024 + d), "--out", dir.string()});
        o.fail_if(code != 0, "cli sweep d=" + std::to_string(d) + " exited " + std::to_string(code));
        const std::string svg = slurp(dir / "sweep_scatter.svg");
        o.fail_if(svg.find("<polyline") == std::string::npos || svg.find("<circle cx") == std::string::npos,
                  "scatter figure lacks boundary curve or sample cloud");
    }
    o.note("figures in " + out.string());
    return o;
}

Outcome oracle_equivalence(const fs::path &) {
    Outcome o;
    const std::pair<int, std::size_t> runs[] = {{2, 4096}, {3, 1024}};
    for (const auto &[d, steps] : runs) {
        const auto envelope = grid_max_overlap(d, steps, 360);
        const auto report = compare_boundaries(envelope, BoundaryIndex::qudit(d), 1e-9);
        o.note("d=" + std::to_string(d) + " steps=" + std::to_string(steps) + ": max_gap " + sci(report.max_gap) +
               ", soundness violations " + std::to_string(report.soundness_violations));
        o.fail_if(report.max_gap > 3e-3, "d=" + std::to_string(d) + " gap above 3e-3");
        o.fail_if(!report.sound(), "d=" + std::to_string(d) + " empirical overlap beyond the boundary by " +
                                       sci(report.worst_soundness));
    }
    return o;
}

Outcome stationarity(const fs::path &) {
    Outcome o;
    Rng rng(4242);
    double worst = 0.0;
    for (int d = 2; d <= 4; ++d) {
        for (int k = 0; k < 1000; ++k) {
            worst = std::max(worst, stationarity_residual(d, rng.uniform(0.0, kTwoPi)).max());
        }
    }
    o.note("max residual " + sci(worst));
    o.fail_if(worst > 1e-9, "residual above 1e-9");
    return o;
}

Outcome rxrz_reproduction(const fs::path &) {
    Outcome o;
    {
        const auto samples = run_sweep(rxrz_sweep(0.0, 800, 7));
        double worst = 0.0;
        double smallest = 1.0;
        for (const auto &s : samples) {
            worst = std::max(worst, std::abs(s.R - 1.0));
            smallest = std::min(smallest, s.R);
        }
        o.note("(a) C=0: max ||O| - 1| = " + sci(worst) + ", min |O| = " + sci(smallest));
        o.fail_if(worst > 1e-9, "(a) C=0 samples are not on the unit circle");
    }
    {
        const auto samples = run_sweep(rxrz_sweep(0.94, 800, 7));
        const auto report = check_confinement(samples, 2, 0.94, 1e-9);
        o.note("(b) C=0.94: " + std::to_string(report.violations.size()) + " violations");
        o.fail_if(!report.confined(), "(b) C=0.94 violates the qubit boundary, max excess " + sci(report.max_excess));
    }
    {
        const auto samples = run_sweep(rxrz_sweep(1.0, 800, 7));
        double worst_im = 0.0;
        for (const auto &s : samples) {
            worst_im = std::max(worst_im, std::abs(s.O.imag()));
        }
        // Bins whose closed interval holds 0 or +-pi.
        const PhaseBinning bins(36);
        std::set<std::size_t> allowed;
        for (std::size_t k = 0; k < bins.n_bins; ++k) {
            for (double target : {-kPi, 0.0, kPi}) {
                if (bins.lower(k) <= target && target <= bins.upper(k)) {
                    allowed.insert(k);
                }
            }
        }
        std::size_t stray = 0;
        const auto hist = phase_histogram(samples, 36);
        for (std::size_t k = 0; k < hist.size(); ++k) {
            if (hist[k].count > 0 && allowed.count(k) == 0) {
                stray += hist[k].count;
            }
        }
        o.note("(c) C=1: max |Im O| = " + sci(worst_im) + ", samples outside the 0/+-pi bins " +
               std::to_string(stray));
        o.fail_if(worst_im > 1e-9, "(c) C=1 overlaps are not real");
        o.fail_if(stray > 0, "(c) C=1 histogram mass away from 0 and +-pi");
    }
    return o;
}

Outcome interferometer_equivalence(const fs::path &) {
    Outcome o;
    Rng rng(99);
    double worst_direct = 0.0;
    double worst_linear = 0.0;
    for (int k = 0; k < 1000; ++k) {
        // Alternate a global U(4) on two qubits with local Haar pairs on two qutrits.
        const int d = k % 2 == 0 ? 2 : 3;
        const TwoQuditState psi = random_state(d, rng);
        const CMatrix u = d == 2 ? haar_unitary(4, rng) : local_product(haar_unitary(3, rng), haar_unitary(3, rng));
        const CVector a = psi.amplitudes();
        const Complex direct = a.dot(u * a);
        const Complex unit = run_interferometry(psi, u, 1.0).signal;
        worst_direct = std::max(worst_direct, std::abs(unit - direct));
        for (double eps : {1.0, 1e-2, 1e-5}) {
            worst_linear = std::max(worst_linear, std::abs(run_interferometry(psi, u, eps).signal - eps * unit));
        }
    }
    o.note("max |signal - <psi|U|psi>| = " + sci(worst_direct) + ", max |signal(eps) - eps signal(1)| = " +
           sci(worst_linear));
    o.fail_if(worst_direct > 1e-12, "readout differs from the direct overlap");
    o.fail_if(worst_linear > 1e-12, "readout is not linear in epsilon");
    return o;
}

Outcome sector_independence(const fs::path &) {
    Outcome o;
    Rng rng(7);
    double worst_theta = 0.0;
    double worst_spectrum = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const int d = 2 + k % 3;
        const TwoQuditState psi = random_state(d, rng);
        const CMatrix ua = project_su(haar_unitary(d, rng));
        const CMatrix ub = project_su(haar_unitary(d, rng));
        const auto before = decompose_sectors(psi);
        const auto after = decompose_sectors(evolve_local(psi, ua, ub));
        // theta is defined modulo 2 pi / d.
        const double period = kTwoPi / d;
        double dtheta = std::fmod(std::abs(after.theta - before.theta), period);
        dtheta = std::min(dtheta, period - dtheta);
        worst_theta = std::max(worst_theta, dtheta);
        Eigen::SelfAdjointEigenSolver<CMatrix> eb(before.Q, Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<CMatrix> ea(after.Q, Eigen::EigenvaluesOnly);
        worst_spectrum = std::max(worst_spectrum, (eb.eigenvalues() - ea.eigenvalues()).cwiseAbs().maxCoeff());
    }
    o.note("max theta change " + sci(worst_theta) + ", max Q spectrum change " + sci(worst_spectrum));
    o.fail_if(worst_theta > 1e-9, "theta changed");
    o.fail_if(worst_spectrum > 1e-9, "Q spectrum changed");
    return o;
}

Outcome determinism(const fs::path &out) {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"boundary", "--d", "4", "--n", "720"},
        {"sweep", "--d", "3", "--n", "5000", "--seed", "31"},
        {"sweep", "--d", "2", "--concurrence", "0.94", "--strategy", "rxrz", "--n", "800", "--seed", "7"},
        {"oracle", "--d", "3", "--steps", "512", "--max-gap", "1"},
        {"oracle", "--d", "4", "--steps", "64", "--random-samples", "100000", "--max-gap", "1"},
        {"interfere", "--d", "3", "--n", "300", "--epsilon", "0.01", "--seed", "5"},
    };
    std::size_t compared = 0;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        const fs::path base = out / ("run" + std::to_string(c));
        auto args = commands[c];
        args.insert(args.end(), {"--threads", "1", "--out", (base / "t1").string()});
        if (cli(args) != 0) {
            o.fail_if(true, commands[c][0] + " run " + std::to_string(c) + " failed");
            continue;
        }
        const std::string manifest = (base / "t1" / (commands[c][0] + "_manifest.json")).string();
        for (const char *threads : {"1", "2", "4"}) {
            const fs::path again = base / (std::string("rerun_t") + threads);
            if (cli({"rerun", "--manifest", manifest, "--threads", threads, "--out", again.string()}) != 0) {
                o.fail_if(true, "rerun of " + manifest + " failed");
                continue;
            }
            for (const auto &entry : fs::directory_iterator(base / "t1")) {
                const std::string name = entry.path().filename().string();
                const bool data = entry.path().extension() == ".csv" ||
                                  (entry.path().extension() == ".json" && name.find("manifest") == std::string::npos);
                if (!data) {
                    continue;
                }
                ++compared;
                o.fail_if(slurp(entry.path()) != slurp(again / name),
                          name + " differs on rerun with --threads " + threads);
            }
        }
    }
    o.note(std::to_string(compared) + " file comparisons");
    o.fail_if(compared == 0, "nothing compared");
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    fs::path out = fs::temp_directory_path() / ("qbl_acceptance_" + std::to_string(::getpid()));
    std::set<int> selected;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--out" && k + 1 < argc) {
            out = argv[++k];
        } else {
            try {
                selected.insert(std::stoi(arg));
            } catch (const std::exception &) {
                std::fprintf(stderr, "usage: acceptance [--out DIR] [criterion ...]\n");
                return 2;
            }
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "topological-phase endpoints", 1.0, topological_endpoints},
        {2, "maximally entangled Haar clouds confined (d = 2, 3, 4)", 30.0, haar_confinement},
        {3, "oracle equivalence (d = 2 at 4096 steps, d = 3 at 1024^2)", 120.0, oracle_equivalence},
        {4, "stationarity certificate", 1.0, stationarity},
        {5, "single-qubit rxrz clouds at C = 0, 0.94, 1", 10.0, rxrz_reproduction},
        {6, "interferometer equivalence", 30.0, interferometer_equivalence},
        {7, "sector independence under local SU(d)", 10.0, sector_independence},
        {8, "manifest reruns byte-identical across --threads", 0.0, determinism},
    };

    int failures = 0;
    int ran = 0;
    for (const auto &c : criteria) {
        if (!selected.empty() && selected.count(c.id) == 0) {
            continue;
        }
        ++ran;
        const fs::path dir = out / ("criterion_" + std::to_string(c.id));
        fs::create_directories(dir);
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body(dir);
        } catch (const std::exception &e) {
            outcome.fail_if(true, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0.0) {
            outcome.fail_if(seconds > c.limit_seconds, "runtime " + sci(seconds) + " s over the " +
                                                           sci(c.limit_seconds) + " s limit");
        }
        std::printf("criterion %d %s  %s  (%.3f s%s)  %s\n", c.id, outcome.passed ? "PASS" : "FAIL", c.name.c_str(),
                    seconds, c.limit_seconds > 0.0 ? (", limit " + sci(c.limit_seconds) + " s").c_str() : "",
                    outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.passed ? 0 : 1;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no such criterion\n");
        return 2;
    }
    fs::remove_all(out);
    return failures == 0 ? 0 : 1;
}
