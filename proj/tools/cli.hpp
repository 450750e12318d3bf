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

// Command-line front end. run() takes an argument vector and returns the
// process exit code, so the tool can be driven in-process by tests.
//
// Exit codes: 0 all checks passed, 1 a check failed (failure JSON written),
// 2 usage error, 3 output could not be written.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qbl/boundary.hpp"
#include "qbl/errors.hpp"
#include "qbl/interferometer.hpp"
#include "qbl/io.hpp"
#include "qbl/oracle.hpp"
#include "qbl/parallel.hpp"
#include "qbl/state.hpp"
#include "qbl/svg.hpp"
#include "qbl/sweep.hpp"

namespace qbl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr double kReadoutTolerance = 1e-12;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Params {
    int d = 0;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::string out = ".";
    double tol = kDefaultMembershipTol;
    unsigned threads = 0;
    std::string format = "csv";
    std::optional<double> concurrence;
    std::string weights;
    std::string strategy;
    std::size_t steps = 1024;
    std::size_t bins = 0;
    double epsilon = 1.0;
    double gamma = 0.0;
    bool degrees = false;
    std::size_t random_samples = kDefaultRandomConfigsD4;
    double max_gap = 3e-3;
};

/// Collects files written and checks evaluated by one subcommand.
class RunContext {
  public:
    RunContext(std::string subcommand, std::filesystem::path dir)
        : subcommand_(std::move(subcommand)), dir_(std::move(dir)) {}

    void write(const std::string &name, const std::string &content) {
        std::filesystem::create_directories(dir_);
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + (dir_ / name).string());
        }
        f << content;
        outputs_.push_back(name);
    }

    void write_json(const std::string &name, const nlohmann::json &j) { write(name, j.dump(2) + "\n"); }

    void check(const std::string &name, bool passed, nlohmann::json detail = nlohmann::json::object()) {
        detail["passed"] = passed;
        checks_[name] = std::move(detail);
        if (!passed) {
            failed_.push_back(name);
        }
    }

    void skip(const std::string &name, const std::string &reason) {
        checks_[name] = {{"passed", nullptr}, {"skipped", reason}};
    }

    const std::string &subcommand() const { return subcommand_; }
    const std::filesystem::path &dir() const { return dir_; }
    const std::vector<std::string> &outputs() const { return outputs_; }
    const nlohmann::json &checks() const { return checks_; }
    const std::vector<std::string> &failed() const { return failed_; }

  private:
    std::string subcommand_;
    std::filesystem::path dir_;
    std::vector<std::string> outputs_;
    nlohmann::json checks_ = nlohmann::json::object();
    std::vector<std::string> failed_;
};

namespace detail {

inline std::vector<double> parse_weights(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("--weights: cannot parse '" + item + "'");
        }
    }
    return out;
}

inline std::optional<std::uint64_t> env_seed() {
    const char *text = std::getenv("QBL_SEED");
    if (text == nullptr || *text == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used, 10);
        if (text[used] != '\0') {
            throw std::invalid_argument(text);
        }
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception &) {
        throw UsageError(std::string("QBL_SEED is not an unsigned integer: ") + text);
    }
}

inline void require_format(const Params &p) {
    if (p.format != "csv" && p.format != "json") {
        throw UsageError("--format must be csv or json");
    }
}

/// Schmidt spec from --concurrence / --weights, maximally entangled otherwise.
inline SchmidtSpec schmidt_of(const Params &p) {
    if (p.concurrence && !p.weights.empty()) {
        throw UsageError("--concurrence and --weights are mutually exclusive");
    }
    if (p.concurrence) {
        if (p.d != 2) {
            throw UsageError("--concurrence requires --d 2");
        }
        return SchmidtSpec::from_concurrence(*p.concurrence);
    }
    if (!p.weights.empty()) {
        SchmidtSpec spec{p.d, parse_weights(p.weights)};
        spec.validate();
        return spec;
    }
    return SchmidtSpec::maximally_entangled(p.d);
}

/// Analytic region for a Schmidt spec: the qubit ellipse for d = 2, the
/// maximally entangled boundary otherwise; none for partially entangled d > 2.
struct RegionChoice {
    bool known = false;
    std::optional<double> concurrence;
};

inline RegionChoice region_of(const SchmidtSpec &spec) {
    if (spec.d == 2) {
        return {true, std::min(1.0, 2.0 * spec.weights[0] * spec.weights[1])};
    }
    const double uniform = 1.0 / std::sqrt(static_cast<double>(spec.d));
    for (double w : spec.weights) {
        if (std::abs(w - uniform) > 1e-12) {
            return {};
        }
    }
    return {true, std::nullopt};
}

inline Strategy strategy_of(const Params &p, Strategy fallback) {
    if (p.strategy.empty()) {
        return fallback;
    }
    const auto s = parse_strategy(p.strategy);
    if (!s) {
        throw UsageError("--strategy must be one of haar-two-sided, haar-one-sided, rxrz");
    }
    return *s;
}

inline std::string plot_title(const std::string &what, int d, std::optional<double> c) {
    std::string t = what + " d=" + std::to_string(d);
    if (c) {
        t += " C=" + format_number(*c);
    }
    return t;
}

inline std::vector<Complex> overlaps_of(const std::vector<OverlapSample> &samples) {
    std::vector<Complex> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        out.push_back(s.O);
    }
    return out;
}

inline void write_samples(RunContext &ctx, const std::string &stem, const Params &p,
                          const std::vector<OverlapSample> &samples,
                          const std::vector<std::pair<std::string, std::vector<double>>> &extra = {}) {
    if (p.format == "csv") {
        ctx.write(stem + ".csv", samples_csv(samples, extra));
    } else {
        ctx.write_json(stem + ".json", samples_json(samples, extra));
    }
}

inline void write_histogram(RunContext &ctx, const std::string &stem, const Params &p,
                            const std::vector<HistogramBin> &hist) {
    if (p.format == "csv") {
        ctx.write(stem + ".csv", histogram_csv(hist));
    } else {
        ctx.write_json(stem + ".json", histogram_json(hist));
    }
}

inline void scatter_with_region(RunContext &ctx, const std::string &name, const std::string &title,
                                const std::vector<Complex> &points, int d, const RegionChoice &region) {
    svg::ComplexPlanePlot plot(title);
    plot.add_points(points, "steelblue");
    if (region.known) {
        plot.add_curve(svg::curve_points(curve(d, static_cast<std::size_t>(360 * d), region.concurrence)), "red");
    }
    ctx.write(name, plot.render());
}

}  // namespace detail

inline void cmd_boundary(const Params &p, RunContext &ctx) {
    require_qudit_dim(p.d);
    if (p.concurrence && p.d != 2) {
        throw UsageError("--concurrence requires --d 2");
    }
    const BoundaryCurve c = curve(p.d, p.n, p.concurrence);
    if (p.format == "csv") {
        ctx.write("boundary.csv", boundary_csv(c));
    } else {
        ctx.write_json("boundary.json", boundary_json(c));
    }
    svg::ComplexPlanePlot plot(detail::plot_title("boundary", p.d, p.concurrence));
    plot.add_curve(svg::curve_points(c), "red");
    ctx.write("boundary.svg", plot.render());
    if (!p.concurrence) {
        const std::size_t branches = c.branch_count();
        ctx.check("branch_count", branches == static_cast<std::size_t>(p.d),
                  {{"branches", branches}, {"expected", p.d}});
    }
}

inline void cmd_sweep(const Params &p, RunContext &ctx) {
    SweepConfig config;
    config.d = p.d;
    require_qudit_dim(p.d);
    config.schmidt = detail::schmidt_of(p);
    config.strategy = detail::strategy_of(p, Strategy::HaarTwoSided);
    config.n_samples = p.n;
    config.seed = p.seed;
    config.tol = p.tol;
    config.threads = p.threads;
    config.validate();

    const auto samples = run_sweep(config);
    detail::write_samples(ctx, "sweep_samples", p, samples);
    const auto hist = phase_histogram(samples, p.bins);
    detail::write_histogram(ctx, "sweep_histogram", p, hist);

    const auto region = detail::region_of(config.schmidt);
    if (region.known) {
        const auto report = check_confinement(samples, p.d, region.concurrence, p.tol);
        ctx.write_json("sweep_confinement.json", confinement_json(report, p.tol));
        ctx.check("confinement", report.confined(),
                  {{"violations", report.violations.size()}, {"max_excess", report.max_excess}});
    } else {
        ctx.skip("confinement", "no analytic boundary for partially entangled states with d > 2");
    }
    const std::string title = detail::plot_title(std::string(to_string(config.strategy)), p.d, region.concurrence);
    detail::scatter_with_region(ctx, "sweep_scatter.svg", title, detail::overlaps_of(samples), p.d, region);
    ctx.write("sweep_histogram.svg", svg::polar_histogram(hist, title, p.degrees));
}

inline void cmd_oracle(const Params &p, RunContext &ctx) {
    if (p.d < kMinQuditDim) {
        throw UsageError("--d must be at least 2");
    }
    if (p.d > 4) {
        throw UsageError("oracle: exhaustive eigenphase enumeration is limited to d <= 4 (the grid grows as steps^(d-1))");
    }
    OracleOptions options;
    options.steps_per_axis = p.steps;
    options.n_bins = p.bins;
    options.random_samples = p.random_samples;
    options.seed = p.seed;
    options.threads = p.threads;
    const auto envelope = grid_max_overlap(p.d, options);
    const auto index = BoundaryIndex::qudit(p.d);
    const auto report = compare_boundaries(envelope, index, p.tol);

    if (p.format == "csv") {
        ctx.write("oracle_empirical.csv", empirical_csv(envelope));
    } else {
        ctx.write_json("oracle_empirical.json", empirical_json(envelope));
    }
    nlohmann::json gap = gap_json(report);
    gap["max_gap_bound"] = p.max_gap;
    ctx.write_json("oracle_gap.json", gap);

    svg::ComplexPlanePlot plot(detail::plot_title("oracle", p.d, std::nullopt));
    std::vector<Complex> pts;
    for (const auto &bin : envelope.bins) {
        if (bin.count > 0) {
            pts.push_back(bin.argmax_overlap);
        }
    }
    plot.add_curve(svg::curve_points(curve(p.d, static_cast<std::size_t>(360 * p.d))), "red");
    plot.add_points(pts, "navy", 1.6);
    ctx.write("oracle_overlay.svg", plot.render());

    ctx.check("soundness", report.sound(),
              {{"violations", report.soundness_violations}, {"worst", report.worst_soundness}});
    ctx.check("max_gap", report.max_gap <= p.max_gap, {{"max_gap", report.max_gap}, {"bound", p.max_gap}});
}

inline void cmd_interfere(const Params &p, RunContext &ctx) {
    require_qudit_dim(p.d);
    require_epsilon(p.epsilon);
    if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) {
        throw UsageError("--gamma must lie in [0, 1]");
    }
    SweepConfig config;
    config.d = p.d;
    config.schmidt = detail::schmidt_of(p);
    config.strategy = detail::strategy_of(p, p.d == 2 ? Strategy::RxRz : Strategy::HaarTwoSided);
    config.n_samples = p.n;
    config.seed = p.seed;
    config.tol = p.tol;
    config.threads = p.threads;
    config.validate();

    const TwoQuditState psi = from_schmidt(config.schmidt);
    std::vector<OverlapSample> readout(p.n);
    std::vector<double> direct_re(p.n), direct_im(p.n), cross(p.n), dephasing_err(p.n);
    const std::size_t block = 64;
    const std::size_t n_blocks = (p.n + block - 1) / block;
    parallel_for_blocks(n_blocks, p.threads, [&](std::size_t b) {
        for (std::size_t k = b * block; k < std::min(p.n, (b + 1) * block); ++k) {
            const LocalPair pair = sample_unitaries(config, k);
            const Complex direct = overlap(psi, evolve_local(psi, pair.u_a, pair.u_b));
            const Complex value =
                run_interferometry(psi, local_product(pair.u_a, pair.u_b), p.epsilon, p.gamma).normalized();
            readout[k] = OverlapSample::make(value, k, config.strategy, config.seed);
            direct_re[k] = direct.real();
            direct_im[k] = direct.imag();
            cross[k] = std::abs(direct - value);
            dephasing_err[k] = std::abs((1.0 - p.gamma) * direct - value);
        }
    });
    detail::write_samples(ctx, "interfere_readout", p, readout,
                          {{"direct_re", direct_re}, {"direct_im", direct_im}, {"cross_check", cross}});
    const auto hist = phase_histogram(readout, p.bins);
    detail::write_histogram(ctx, "interfere_histogram", p, hist);

    const double max_cross = *std::max_element(cross.begin(), cross.end());
    const double max_dephasing = *std::max_element(dephasing_err.begin(), dephasing_err.end());
    if (p.gamma == 0.0) {
        ctx.check("cross_check", max_cross <= kReadoutTolerance,
                  {{"max", max_cross}, {"bound", kReadoutTolerance}});
    } else {
        ctx.skip("cross_check", "readout is attenuated by dephasing");
    }
    ctx.check("dephasing_scaling", max_dephasing <= kReadoutTolerance,
              {{"max", max_dephasing}, {"bound", kReadoutTolerance}});

    const auto region = detail::region_of(config.schmidt);
    if (region.known) {
        const auto report = check_confinement(readout, p.d, region.concurrence, p.tol);
        ctx.check("confinement", report.confined(),
                  {{"violations", report.violations.size()}, {"max_excess", report.max_excess}});
    } else {
        ctx.skip("confinement", "no analytic boundary for partially entangled states with d > 2");
    }
    const std::string title = detail::plot_title("interferometer", p.d, region.concurrence);
    detail::scatter_with_region(ctx, "interfere_scatter.svg", title, detail::overlaps_of(readout), p.d, region);
    ctx.write("interfere_histogram.svg", svg::polar_histogram(hist, title, p.degrees));
}

/// Resolved parameters of a subcommand, as stored in its manifest.
inline nlohmann::json params_json(const std::string &sub, const Params &p) {
    nlohmann::json j;
    j["d"] = p.d;
    j["seed"] = p.seed;
    j["tol"] = p.tol;
    j["format"] = p.format;
    if (sub != "oracle") {
        j["n"] = p.n;
    }
    if (sub != "boundary") {
        j["bins"] = p.bins;
    }
    if (p.concurrence) {
        j["concurrence"] = *p.concurrence;
    }
    if (!p.weights.empty()) {
        j["weights"] = p.weights;
    }
    if (!p.strategy.empty()) {
        j["strategy"] = p.strategy;
    }
    if (sub == "oracle") {
        j["steps"] = p.steps;
        j["random-samples"] = p.random_samples;
        j["max-gap"] = p.max_gap;
    }
    if (sub == "interfere") {
        j["epsilon"] = p.epsilon;
        j["gamma"] = p.gamma;
    }
    if (sub == "sweep" || sub == "interfere") {
        j["degrees"] = p.degrees;
    }
    return j;
}

/// Argument list that reproduces a manifest's run.
inline std::vector<std::string> args_from_manifest(const nlohmann::json &manifest) {
    std::vector<std::string> args{"qbl", manifest.at("subcommand").get<std::string>()};
    for (const auto &[key, value] : manifest.at("params").items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back("--" + key);
            }
            continue;
        }
        args.push_back("--" + key);
        if (value.is_string()) {
            args.push_back(value.get<std::string>());
        } else if (value.is_number_float()) {
            args.push_back(format_number(value.get<double>()));
        } else {
            args.push_back(value.dump());
        }
    }
    return args;
}

inline int run(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr,
               bool honor_env_seed = true);

namespace detail {

inline int rerun(const std::string &manifest_path, const std::string &out_dir, std::optional<unsigned> threads,
                 std::ostream &out, std::ostream &err) {
    std::ifstream f(manifest_path);
    if (!f) {
        err << "qbl rerun: cannot open " << manifest_path << "\n";
        return kExitUsage;
    }
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception &e) {
        err << "qbl rerun: invalid manifest: " << e.what() << "\n";
        return kExitUsage;
    }
    std::vector<std::string> args = args_from_manifest(manifest);
    args.push_back("--out");
    args.push_back(out_dir.empty() ? manifest.at("out").get<std::string>() : out_dir);
    args.push_back("--threads");
    args.push_back(std::to_string(threads ? *threads : manifest.at("threads").get<unsigned>()));
    // The manifest already holds the resolved seed.
    return run(args, out, err, false);
}

}  // namespace detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, bool honor_env_seed) {
    CLI::App app{"qudit overlap boundaries: analytic curves, sweeps, oracle and interferometer simulation", "qbl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Params p;
    CLI::App *boundary = app.add_subcommand("boundary", "Analytic boundary curve (CSV/JSON + SVG)");
    CLI::App *sweep = app.add_subcommand("sweep", "Random local evolutions and confinement check");
    CLI::App *oracle = app.add_subcommand("oracle", "Brute-force eigenphase enumeration against the boundary");
    CLI::App *interfere = app.add_subcommand("interfere", "Simulated ancilla interferometer readout");
    CLI::App *rerun = app.add_subcommand("rerun", "Repeat the run recorded in a manifest");

    for (CLI::App *sub : {boundary, sweep, oracle, interfere}) {
        sub->add_option("--d", p.d, "Local dimension")->required();
        sub->add_option("--seed", p.seed, "RNG seed (QBL_SEED overrides)");
        sub->add_option("--out", p.out, "Output directory");
        sub->add_option("--tol", p.tol, "Membership tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--threads", p.threads, "Worker cap (0: hardware concurrency)");
        sub->add_option("--format", p.format, "Data format: csv or json");
    }
    for (CLI::App *sub : {boundary, sweep, interfere}) {
        sub->add_option("--n", p.n, "Number of samples");
        sub->add_option("--concurrence", p.concurrence, "Two-qubit concurrence in [0, 1] (d = 2)");
    }
    for (CLI::App *sub : {sweep, interfere}) {
        sub->add_option("--weights", p.weights, "Comma-separated Schmidt weights, descending, squares summing to 1");
        sub->add_option("--strategy", p.strategy, "haar-two-sided, haar-one-sided or rxrz");
        sub->add_flag("--degrees", p.degrees, "Degree labels on polar histograms");
    }
    for (CLI::App *sub : {sweep, oracle, interfere}) {
        sub->add_option("--bins", p.bins, "Phase bins");
    }
    oracle->add_option("--steps", p.steps, "Grid steps per free eigenphase");
    oracle->add_option("--random-samples", p.random_samples, "Extra random configurations (d = 4)");
    oracle->add_option("--max-gap", p.max_gap, "Largest accepted gap to the analytic boundary");
    interfere->add_option("--epsilon", p.epsilon, "Pseudo-pure polarization in (0, 1]");
    interfere->add_option("--gamma", p.gamma, "Ancilla dephasing in [0, 1]");

    std::string manifest_path;
    std::string rerun_out;
    std::optional<unsigned> rerun_threads;
    rerun->add_option("--manifest", manifest_path, "Manifest JSON written by an earlier run")->required();
    rerun->add_option("--out", rerun_out, "Output directory (default: the manifest's)");
    rerun->add_option("--threads", rerun_threads, "Worker cap override");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (rerun->parsed()) {
        return detail::rerun(manifest_path, rerun_out, rerun_threads, out, err);
    }

    CLI::App *chosen = app.get_subcommands().front();
    const std::string sub = chosen->get_name();
    if (p.n == 0) {
        p.n = sub == "boundary" ? 720 : 800;
    }
    if (p.bins == 0) {
        p.bins = sub == "oracle" ? 360 : 36;
    }

    const auto start = std::chrono::steady_clock::now();
    RunContext ctx(sub, p.out);
    try {
        if (honor_env_seed) {
            if (const auto s = detail::env_seed()) {
                p.seed = *s;
            }
        }
        detail::require_format(p);
        if (sub == "boundary") {
            cmd_boundary(p, ctx);
        } else if (sub == "sweep") {
            cmd_sweep(p, ctx);
        } else if (sub == "oracle") {
            cmd_oracle(p, ctx);
        } else {
            cmd_interfere(p, ctx);
        }
    } catch (const UsageError &e) {
        err << "qbl " << sub << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "qbl " << sub << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "qbl " << sub << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "qbl " << sub << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "qbl " << sub << ": " << e.what() << "\n";
        return kExitIo;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool passed = ctx.failed().empty();
    std::vector<std::string> outputs = ctx.outputs();
    const std::string manifest_name = sub + "_manifest.json";
    outputs.push_back(manifest_name);
    if (!passed) {
        outputs.push_back(sub + "_failure.json");
    }
    nlohmann::json manifest;
    manifest["subcommand"] = sub;
    manifest["version"] = kVersion;
    manifest["seed"] = p.seed;
    manifest["params"] = params_json(sub, p);
    manifest["out"] = p.out;
    manifest["threads"] = p.threads;
    manifest["outputs"] = outputs;
    manifest["duration_seconds"] = seconds;
    manifest["checks"] = ctx.checks();
    manifest["passed"] = passed;
    ctx.write_json(manifest_name, manifest);

    if (!passed) {
        nlohmann::json failure;
        failure["subcommand"] = sub;
        failure["version"] = kVersion;
        failure["failed_checks"] = ctx.failed();
        failure["checks"] = ctx.checks();
        ctx.write_json(sub + "_failure.json", failure);
        out << failure.dump() << "\n";
        return kExitCheckFailed;
    }
    out << "qbl " << sub << ": ok (" << ctx.outputs().size() << " files in " << p.out << ")\n";
    return kExitOk;
}

inline int run_main(int argc, char **argv) {
    return run(std::vector<std::string>(argv, argv + argc));
}

}  // namespace qbl::cli
