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

/**
 * @file
 * Command-line front end: generate, forecast, benchmark, transpile, plot.
 *
 * Exit codes: 0 success, 1 usage error, 2 data or parse error,
 * 3 numeric or fit error.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qts/baselines.hpp"
#include "qts/dataio.hpp"
#include "qts/forecast.hpp"

namespace qts::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericError = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Model tokens accepted by `benchmark`, in canonical order.
const std::vector<std::string>& known_models();

struct ModelEntry {
    std::string name;
    double mse = 0.0;
    std::vector<double> predictions;
    std::string config_json;  // serialized config object
};

struct BenchmarkReport {
    std::string input;
    std::uint64_t seed = 0;
    std::size_t train_len = 0;
    std::size_t steps = 0;
    unsigned num_qubits = 0;
    ForecastMode mode = ForecastMode::Rolling;
    NormalizationParams params;
    std::vector<double> actuals;
    std::vector<ModelEntry> models;
};

struct BenchmarkRequest {
    std::size_t train_len = 0;
    std::size_t steps = 0;
    std::vector<std::string> models;  // deduplicated, validated tokens
    ForecastMode mode = ForecastMode::Rolling;
    ExecConfig exec;
};

/// Evaluates every model on the identical split. Throws ArgumentError on an unknown token.
BenchmarkReport run_benchmark(const TimeSeries& series, const BenchmarkRequest& request,
                              const std::string& input_label);

/// Serialized forms. Keys are emitted in a fixed order; throws DomainError on non-finite values.
std::string forecast_json(const ForecastResult& result, const std::string& input_label);
std::string benchmark_json(const BenchmarkReport& report);
std::string benchmark_table_csv(const BenchmarkReport& report);

struct PlotSeries {
    std::string label;
    std::vector<double> values;
};

/// Extracts actuals and prediction series from a forecast or benchmark JSON document.
/// Throws ParseError on malformed input.
void collect_plot_series(const std::string& json_text, const std::string& fallback_label,
                         std::optional<std::vector<double>>& actuals,
                         std::vector<PlotSeries>& predictions);

/// Line chart: one polyline for the actuals, one per non-empty prediction series.
std::string render_svg(const std::vector<double>& actuals, const std::vector<PlotSeries>& predictions);

}  // namespace qts::cli
