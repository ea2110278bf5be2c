// Copyright 2026 The QTS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qts/errors.hpp"
#include "qts/random.hpp"
#include "qts/transpile.hpp"
#include "qts_cli/cli.hpp"

namespace qts::cli {

namespace {

namespace fs = std::filesystem;

struct SeedOption {
    std::uint64_t value = 0;
    CLI::Option* opt = nullptr;

    void attach(CLI::App* app) {
        opt = app->add_option("--seed", value, "Master seed (falls back to $QTS_SEED, then 0)");
    }

    std::uint64_t resolve() const {
        if (opt->count() > 0) {
            return value;
        }
        if (const char* env = std::getenv("QTS_SEED"); env != nullptr && *env != '\0') {
            std::uint64_t v = 0;
            std::istringstream in(env);
            if (!(in >> v) || !in.eof()) {
                throw ArgumentError(std::string("QTS_SEED is not an unsigned integer: ") + env);
            }
            return v;
        }
        return 0;
    }
};

struct ExecOptions {
    std::uint64_t shots = 0;
    double depol = 0.0;
    std::vector<double> readout;
    std::uint32_t trajectories = 256;
    CLI::Option* depol_opt = nullptr;
    CLI::Option* readout_opt = nullptr;
    CLI::Option* traj_opt = nullptr;
    SeedOption seed;

    void attach(CLI::App* app) {
        app->add_option("--shots", shots, "Measurement shots per step (0 = exact distribution)");
        seed.attach(app);
        depol_opt = app->add_option("--depol", depol, "Depolarizing probability per CX")
                        ->check(CLI::Range(0.0, 1.0));
        readout_opt = app->add_option("--readout", readout,
                                      "Readout flip probability (one value, or one per qubit)")
                          ->delimiter(',')
                          ->check(CLI::Range(0.0, 1.0));
        traj_opt = app->add_option("--trajectories", trajectories,
                                   "Monte-Carlo trajectories for depolarizing noise")
                       ->check(CLI::PositiveNumber);
    }

    ExecConfig resolve() const {
        ExecConfig exec;
        exec.shots = shots;
        exec.seed = seed.resolve();
        const bool any_noise = depol_opt->count() > 0 || readout_opt->count() > 0;
        if (depol > 0.0 && shots == 0 && traj_opt->count() == 0) {
            throw ArgumentError("--depol with --shots 0 needs an explicit --trajectories");
        }
        if (any_noise) {
            exec.noise = NoiseModel{depol, readout, trajectories};
        }
        exec.validate();
        return exec;
    }
};

void write_output(const std::string& path, const std::string& content) {
    write_file_atomic(path, content);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(ParseError::Kind::Io, 0, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum time-series forecasting and benchmark harness", "qts"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic AR(1) series as CSV");
    double phi = 0.8;
    double sigma = 0.01;
    std::size_t length = 0;
    std::string gen_out;
    SeedOption gen_seed;
    gen->add_option("--phi", phi, "AR coefficient");
    gen->add_option("--sigma", sigma, "Noise standard deviation")->check(CLI::NonNegativeNumber);
    gen->add_option("--length", length, "Number of values")->required()->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_out, "Output CSV path")->required();
    gen_seed.attach(gen);

    // forecast
    auto* fc = app.add_subcommand("forecast", "Run the QTS forecaster on a CSV series");
    std::string fc_input;
    std::string fc_out;
    std::size_t fc_train = 0;
    std::size_t fc_steps = 0;
    std::string fc_variant = "full";
    std::string fc_mode = "rolling";
    ExecOptions fc_exec;
    fc->add_option("--input", fc_input, "Input CSV")->required();
    fc->add_option("--train-len", fc_train, "Training prefix length")->required();
    fc->add_option("--steps", fc_steps, "Forecast steps")->required();
    fc->add_option("--variant", fc_variant, "rot|fwd|full")
        ->check(CLI::IsMember({"rot", "fwd", "full"}));
    fc->add_option("--mode", fc_mode, "rolling|recursive")
        ->check(CLI::IsMember({"rolling", "recursive"}));
    fc->add_option("--out", fc_out, "Output JSON path")->required();
    fc_exec.attach(fc);

    // benchmark
    auto* bench = app.add_subcommand("benchmark", "Compare classical and QTS models on one split");
    std::string b_input;
    std::string b_report;
    std::string b_table;
    std::size_t b_train = 0;
    std::size_t b_steps = 0;
    std::vector<std::string> b_models = known_models();
    std::string b_mode = "rolling";
    ExecOptions b_exec;
    bench->add_option("--input", b_input, "Input CSV")->required();
    bench->add_option("--train-len", b_train, "Training prefix length")->required();
    bench->add_option("--steps", b_steps, "Forecast steps")->required();
    bench->add_option("--models", b_models, "Comma-separated model tokens")->delimiter(',');
    bench->add_option("--mode", b_mode, "rolling|recursive")
        ->check(CLI::IsMember({"rolling", "recursive"}));
    bench->add_option("--report", b_report, "Output JSON report")->required();
    bench->add_option("--table", b_table, "Output CSV table (model,mse)")->required();
    b_exec.attach(bench);

    // transpile
    auto* tr = app.add_subcommand("transpile", "Lower a QTS circuit to {RZ, SX, X, CX} and report counts");
    unsigned tr_qubits = 0;
    std::string tr_variant = "full";
    std::string tr_emit;
    std::string tr_input;
    unsigned tr_trials = 100;
    SeedOption tr_seed;
    auto* qubits_opt = tr->add_option("--qubits", tr_qubits, "Register size");
    tr->add_option("--variant", tr_variant, "rot|fwd|full")
        ->check(CLI::IsMember({"rot", "fwd", "full"}));
    auto* input_opt = tr->add_option("--input", tr_input, "Circuit text file to lower instead of a QTS circuit");
    tr->add_option("--emit", tr_emit, "Write the lowered circuit text here");
    tr->add_option("--trials", tr_trials, "Random inputs for the equivalence check")->check(CLI::PositiveNumber);
    tr_seed.attach(tr);
    qubits_opt->excludes(input_opt);

    // plot
    auto* plot = app.add_subcommand("plot", "Render forecasts against actuals as SVG");
    std::vector<std::string> plot_inputs;
    std::string plot_out;
    plot->add_option("--forecast", plot_inputs, "Forecast or benchmark JSON (repeatable)")->required();
    plot->add_option("--out", plot_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) {
            const TimeSeries s = gen_ar1(phi, sigma, length, gen_seed.resolve());
            write_csv(s, gen_out);
            out << "wrote " << s.values.size() << " values to " << gen_out << "\n";
        } else if (*fc) {
            const TimeSeries s = read_csv(fc_input);
            ForecastRequest req{fc_train, fc_steps, parse_variant(fc_variant), parse_mode(fc_mode),
                                fc_exec.resolve()};
            const ForecastResult res = forecast_many(s.values, req);
            write_output(fc_out, forecast_json(res, fs::path(fc_input).filename().string()));
            out << "forecast " << res.predictions.size() << " steps, n=" << res.num_qubits;
            if (res.mse) out << ", mse=" << *res.mse;
            out << "\n";
        } else if (*bench) {
            BenchmarkRequest req;
            req.train_len = b_train;
            req.steps = b_steps;
            req.mode = parse_mode(b_mode);
            req.exec = b_exec.resolve();
            std::set<std::string> seen;
            for (const auto& m : b_models) {
                if (std::find(known_models().begin(), known_models().end(), m) == known_models().end()) {
                    throw ArgumentError("unknown model token '" + m + "'");
                }
                if (!seen.insert(m).second) {
                    err << "warning: duplicate model '" << m << "' ignored\n";
                    continue;
                }
                req.models.push_back(m);
            }
            const TimeSeries s = read_csv(b_input);
            const BenchmarkReport report = run_benchmark(s, req, fs::path(b_input).filename().string());
            const std::string json = benchmark_json(report);
            const std::string table = benchmark_table_csv(report);
            write_output(b_report, json);
            write_output(b_table, table);
            out << table;
        } else if (*tr) {
            Circuit original(1);
            if (input_opt->count() > 0) {
                original = parse_circuit_text(slurp(tr_input));
            } else {
                if (qubits_opt->count() == 0) {
                    throw ArgumentError("transpile needs --qubits or --input");
                }
                if (tr_qubits < 1 || tr_qubits > kMaxQubits) {
                    throw ArgumentError("--qubits must lie in [1, " + std::to_string(kMaxQubits) + "]");
                }
                Rng rng(tr_seed.resolve());
                std::vector<double> thetas(tr_qubits);
                for (double& t : thetas) t = std::numbers::pi * rng.uniform();
                original = build_qts_circuit(thetas, parse_variant(tr_variant));
            }
            const Circuit lowered = transpile(original);
            const GateCounts before = gate_counts(original);
            const GateCounts after = gate_counts(lowered);
            const double deviation = verify_equivalence(original, lowered, tr_trials, tr_seed.resolve() + 1);
            out << "before: " << before.single_qubit << " 1q / " << before.two_qubit << " 2q\n"
                << "after: " << after.single_qubit << " 1q / " << after.two_qubit << " 2q\n"
                << "max deviation: " << deviation << " over " << tr_trials << " trials\n";
            if (!tr_emit.empty()) {
                write_output(tr_emit, to_text(lowered));
            }
            if (!(deviation <= kEquivalenceTolerance)) {
                err << "error: lowered circuit deviates beyond " << kEquivalenceTolerance << "\n";
                return kNumericError;
            }
        } else if (*plot) {
            std::optional<std::vector<double>> actuals;
            std::vector<PlotSeries> predictions;
            for (const auto& path : plot_inputs) {
                collect_plot_series(slurp(path), fs::path(path).stem().string(), actuals, predictions);
            }
            write_output(plot_out, render_svg(actuals.value_or(std::vector<double>{}), predictions));
            out << "wrote " << plot_out << "\n";
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericError;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        // FitError, SingularityError, DegenerateRangeError
        err << "error: " << e.what() << "\n";
        return kNumericError;
    }
    return kOk;
}

}  // namespace qts::cli
