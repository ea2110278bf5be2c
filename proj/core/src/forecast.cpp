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

#include "qts/forecast.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qts/baselines.hpp"
#include "qts/errors.hpp"
#include "qts/random.hpp"

namespace qts {

namespace {

const Matrix2& pauli(unsigned index) {
    static const Matrix2 table[4] = {identity_matrix(), x_matrix(), y_matrix(), z_matrix()};
    return table[index];
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError(std::string(what) + " must lie in [0, 1]");
    }
}

// One Monte-Carlo trajectory: each CX is followed, with probability p, by a
// uniformly chosen non-identity Pauli pair on its two qubits.
StateVector run_depolarized(const Circuit& circuit, double p, Rng& rng) {
    StateVector state(circuit.num_qubits());
    for (const auto& op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::RY: state.apply_ry(op.q0, op.angle); break;
            case GateKind::RZ: state.apply_rz(op.q0, op.angle); break;
            case GateKind::SX: state.apply_sx(op.q0); break;
            case GateKind::X: state.apply_x(op.q0); break;
            case GateKind::CX:
                state.apply_cx(op.q0, op.q1);
                if (rng.uniform() < p) {
                    const auto r = static_cast<unsigned>(1 + rng.below(15));
                    if (r / 4 != 0) state.apply_1q_unitary(op.q0, pauli(r / 4));
                    if (r % 4 != 0) state.apply_1q_unitary(op.q1, pauli(r % 4));
                }
                break;
        }
    }
    return state;
}

}  // namespace

std::vector<double> NoiseModel::readout_for(unsigned num_qubits) const {
    if (readout_flip.empty()) {
        return {};
    }
    if (readout_flip.size() == 1) {
        return std::vector<double>(num_qubits, readout_flip.front());
    }
    if (readout_flip.size() != num_qubits) {
        throw ArgumentError("readout flip list has " + std::to_string(readout_flip.size()) +
                            " entries for " + std::to_string(num_qubits) + " qubits");
    }
    return readout_flip;
}

bool NoiseModel::has_readout() const {
    return std::any_of(readout_flip.begin(), readout_flip.end(), [](double f) { return f != 0.0; });
}

void ExecConfig::validate() const {
    if (!noise) {
        return;
    }
    check_probability(noise->two_qubit_depol, "depolarizing probability");
    for (double f : noise->readout_flip) {
        check_probability(f, "readout flip probability");
    }
    if (noise->two_qubit_depol > 0.0 && noise->trajectories == 0) {
        throw ArgumentError("depolarizing noise needs at least one trajectory");
    }
}

std::string_view to_string(ForecastMode mode) {
    return mode == ForecastMode::Rolling ? "rolling" : "recursive";
}

ForecastMode parse_mode(std::string_view token) {
    if (token == "rolling") return ForecastMode::Rolling;
    if (token == "recursive") return ForecastMode::Recursive;
    throw ArgumentError("unknown mode '" + std::string(token) + "' (expected rolling|recursive)");
}

unsigned window_size_for(std::size_t train_len) {
    if (train_len < 2) {
        throw InsufficientDataError("training length must be >= 2");
    }
    return static_cast<unsigned>(std::bit_width(train_len) - 1);
}

ProbDist execute(const Circuit& circuit, const ExecConfig& exec, std::uint64_t stream) {
    exec.validate();
    const unsigned n = circuit.num_qubits();
    const std::uint64_t step_seed = derive_seed(exec.seed, stream);
    const double depol = exec.noise ? exec.noise->two_qubit_depol : 0.0;

    std::optional<ProbDist> dist;
    if (depol > 0.0) {
        std::vector<double> acc(std::size_t{1} << n, 0.0);
        const std::uint32_t trajectories = exec.noise->trajectories;
        for (std::uint32_t t = 0; t < trajectories; ++t) {
            Rng rng(derive_seed(step_seed, t + 1));
            const StateVector state = run_depolarized(circuit, depol, rng);
            const auto amps = state.amplitudes();
            for (std::size_t k = 0; k < acc.size(); ++k) {
                acc[k] += std::norm(amps[k]);
            }
        }
        for (double& p : acc) {
            p /= trajectories;
        }
        dist.emplace(n, std::move(acc));
    } else {
        dist.emplace(probabilities(run(circuit)));
    }

    std::vector<double> flips;
    if (exec.noise && exec.noise->has_readout()) {
        flips = exec.noise->readout_for(n);
    }
    if (exec.shots == 0) {
        return flips.empty() ? std::move(*dist) : apply_readout_flips(*dist, flips);
    }
    return sample(*dist, exec.shots, derive_seed(step_seed, 0), flips).to_distribution();
}

Circuit window_circuit(std::span<const double> window, Variant variant,
                       const NormalizationParams& params) {
    if (window.empty()) {
        throw ArgumentError("empty forecast window");
    }
    // Qubit 0 takes the newest value.
    std::vector<double> thetas(window.size());
    for (std::size_t j = 0; j < window.size(); ++j) {
        thetas[j] = angle_encode(normalize(window[window.size() - 1 - j], params, true));
    }
    return build_qts_circuit(thetas, variant);
}

ProbDist forecast_distribution(std::span<const double> window, Variant variant,
                               const NormalizationParams& params, const ExecConfig& exec,
                               std::uint64_t stream) {
    return execute(window_circuit(window, variant, params), exec, stream);
}

double forecast_one(std::span<const double> window, Variant variant,
                    const NormalizationParams& params, const ExecConfig& exec,
                    std::uint64_t stream) {
    const auto n = static_cast<unsigned>(window.size());
    const ProbDist dist = forecast_distribution(window, variant, params, exec, stream);
    const double top = static_cast<double>((std::uint64_t{1} << n) - 1);
    return decode_prediction(std::clamp(expectation_bitvalue(dist), 0.0, top), n, params);
}

ForecastResult forecast_many(std::span<const double> series, const ForecastRequest& request) {
    return forecast_many(SpanSeries(series), request);
}

ForecastResult forecast_many(const SeriesSource& series, const ForecastRequest& request) {
    if (request.train_len < 2 || series.size() < request.train_len) {
        throw InsufficientDataError("series shorter than the training length");
    }
    std::vector<double> train(request.train_len);
    for (std::size_t i = 0; i < train.size(); ++i) {
        train[i] = series.at(i);
    }
    return forecast_many(series, request, fit_norm_params(train));
}

ForecastResult forecast_many(const SeriesSource& series, const ForecastRequest& request,
                             const NormalizationParams& params) {
    const std::size_t train_len = request.train_len;
    const std::size_t steps = request.steps;
    const unsigned n = window_size_for(train_len);
    if (series.size() < train_len) {
        throw InsufficientDataError("series shorter than the training length");
    }
    if (request.mode == ForecastMode::Rolling && series.size() < train_len + steps) {
        throw InsufficientDataError("rolling forecast of " + std::to_string(steps) +
                                    " steps needs " + std::to_string(train_len + steps) +
                                    " values, series has " + std::to_string(series.size()));
    }
    request.exec.validate();

    ForecastResult result;
    result.request = request;
    result.num_qubits = n;
    result.params = params;
    result.predictions.reserve(steps);

    if (request.mode == ForecastMode::Rolling) {
        std::vector<double> window(n);
        for (std::size_t j = 0; j < steps; ++j) {
            const std::size_t end = train_len + j;
            for (unsigned i = 0; i < n; ++i) {
                window[i] = series.at(end - n + i);
            }
            result.predictions.push_back(
                forecast_one(window, request.variant, params, request.exec, j));
        }
    } else {
        std::vector<double> history(n);
        for (unsigned i = 0; i < n; ++i) {
            history[i] = series.at(train_len - n + i);
        }
        for (std::size_t j = 0; j < steps; ++j) {
            const double pred = forecast_one(history, request.variant, params, request.exec, j);
            result.predictions.push_back(pred);
            std::rotate(history.begin(), history.begin() + 1, history.end());
            history.back() = pred;
        }
    }

    if (series.size() >= train_len + steps) {
        result.actuals.reserve(steps);
        for (std::size_t j = 0; j < steps; ++j) {
            result.actuals.push_back(series.at(train_len + j));
        }
        if (steps > 0) {
            result.mse = normalized_mse(result.predictions, result.actuals, params);
        }
    }
    return result;
}

ProbDist mitigate_readout(const ProbDist& observed, std::span<const double> flip_probs) {
    const unsigned n = observed.num_qubits();
    if (flip_probs.size() != n) {
        throw ArgumentError("flip probability list does not match qubit count");
    }
    for (double f : flip_probs) {
        if (!(f >= 0.0)) {
            throw ArgumentError("flip probability must be non-negative");
        }
        if (f >= 0.5) {
            throw SingularityError("confusion matrix is singular for flip probability >= 0.5");
        }
    }
    if (std::all_of(flip_probs.begin(), flip_probs.end(), [](double f) { return f == 0.0; })) {
        return observed;
    }
    std::vector<double> probs(observed.probs().begin(), observed.probs().end());
    for (unsigned q = 0; q < n; ++q) {
        const double f = flip_probs[q];
        if (f == 0.0) {
            continue;
        }
        const double det = 1.0 - 2.0 * f;
        const std::size_t stride = qubit_mask(n, q);
        for (std::size_t base = 0; base < probs.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const double p0 = probs[i];
                const double p1 = probs[i + stride];
                probs[i] = ((1.0 - f) * p0 - f * p1) / det;
                probs[i + stride] = ((1.0 - f) * p1 - f * p0) / det;
            }
        }
    }
    double total = 0.0;
    for (double& p : probs) {
        p = std::max(p, 0.0);
        total += p;
    }
    if (!(total > 0.0)) {
        throw SingularityError("mitigated distribution has no positive mass");
    }
    for (double& p : probs) {
        p /= total;
    }
    return ProbDist(n, std::move(probs));
}

ProbDist mitigate_readout(const Counts& counts, std::span<const double> flip_probs) {
    return mitigate_readout(counts.to_distribution(), flip_probs);
}

}  // namespace qts
