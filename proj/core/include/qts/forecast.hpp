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
 * QTS forecasting engine.
 *
 * One forecast step normalizes a window of the n most recent values, encodes
 * them on n qubits (qubit 0 = newest), runs the chosen circuit variant,
 * obtains the outcome distribution and decodes its bit-value expectation.
 *
 * The distribution is exact when shots == 0 and empirical otherwise. With a
 * noise model, depolarizing noise is simulated by Monte-Carlo Pauli injection
 * after each CX, averaged over trajectories, and readout noise flips measured
 * bits independently per qubit.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qts/circuit.hpp"
#include "qts/encoding.hpp"
#include "qts/statevec.hpp"

namespace qts {

struct NoiseModel {
    /// Probability that a random non-identity two-qubit Pauli follows each CX.
    double two_qubit_depol = 0.0;
    /// Per-qubit readout flip probability. A single entry applies to every qubit;
    /// empty means no readout noise.
    std::vector<double> readout_flip;
    std::uint32_t trajectories = 256;

    /// Readout flips expanded to `num_qubits` entries (empty if none).
    std::vector<double> readout_for(unsigned num_qubits) const;
    bool has_readout() const;
};

struct ExecConfig {
    std::uint64_t shots = 0;  // 0 = exact distribution
    std::uint64_t seed = 0;
    std::optional<NoiseModel> noise;

    /// Throws ArgumentError on probabilities outside [0, 1] or zero trajectories
    /// with a non-zero depolarizing rate.
    void validate() const;
};

enum class ForecastMode { Rolling, Recursive };

std::string_view to_string(ForecastMode mode);
/// Accepts "rolling" and "recursive".
ForecastMode parse_mode(std::string_view token);

/// floor(log2(train_len)); train_len must be >= 2.
unsigned window_size_for(std::size_t train_len);

/// Outcome distribution of `circuit` under `exec`. `stream` selects an
/// independent random stream of exec.seed.
ProbDist execute(const Circuit& circuit, const ExecConfig& exec, std::uint64_t stream = 0);

/// Circuit for a raw window ordered oldest to newest.
Circuit window_circuit(std::span<const double> window, Variant variant,
                       const NormalizationParams& params);

ProbDist forecast_distribution(std::span<const double> window, Variant variant,
                               const NormalizationParams& params, const ExecConfig& exec,
                               std::uint64_t stream = 0);

/// Decoded one-step prediction for a raw window ordered oldest to newest.
double forecast_one(std::span<const double> window, Variant variant,
                    const NormalizationParams& params, const ExecConfig& exec,
                    std::uint64_t stream = 0);

/// Read-only indexed series. Lets callers observe which values a forecast reads.
class SeriesSource {
public:
    virtual ~SeriesSource() = default;
    virtual std::size_t size() const = 0;
    virtual double at(std::size_t index) const = 0;
};

class SpanSeries final : public SeriesSource {
public:
    explicit SpanSeries(std::span<const double> values) : values_(values) {}
    std::size_t size() const override { return values_.size(); }
    double at(std::size_t index) const override { return values_[index]; }

private:
    std::span<const double> values_;
};

struct ForecastRequest {
    std::size_t train_len = 0;
    std::size_t steps = 0;
    Variant variant = Variant::Full;
    ForecastMode mode = ForecastMode::Rolling;
    ExecConfig exec;
};

struct ForecastResult {
    std::vector<double> predictions;
    std::vector<double> actuals;
    /// Mean squared error on the normalized training scale; absent without actuals or steps.
    std::optional<double> mse;
    ForecastRequest request;
    unsigned num_qubits = 0;
    NormalizationParams params;
};

/// Fits normalization on series[0, train_len) and forecasts `steps` values.
ForecastResult forecast_many(const SeriesSource& series, const ForecastRequest& request);
ForecastResult forecast_many(std::span<const double> series, const ForecastRequest& request);

/// Same, with normalization already fitted. Reads only the forecast windows and actuals.
ForecastResult forecast_many(const SeriesSource& series, const ForecastRequest& request,
                             const NormalizationParams& params);

/// Inverts independent per-qubit readout flips on an empirical distribution.
/// Negative entries are clipped to 0 and the result renormalized.
/// Throws SingularityError for any flip probability >= 0.5.
ProbDist mitigate_readout(const ProbDist& observed, std::span<const double> flip_probs);
ProbDist mitigate_readout(const Counts& counts, std::span<const double> flip_probs);

}  // namespace qts
