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

#include "qts/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qts/errors.hpp"
#include "qts/statevec.hpp"

namespace qts {

NormalizationParams make_norm_params(double x_min, double x_max) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        throw DegenerateRangeError("normalization range must satisfy x_max > x_min");
    }
    return {x_min, x_max};
}

NormalizationParams fit_norm_params(std::span<const double> train) {
    if (train.size() < 2) {
        throw InsufficientDataError("normalization needs at least 2 values");
    }
    const auto [lo, hi] = std::minmax_element(train.begin(), train.end());
    return make_norm_params(*lo, *hi);
}

double normalize(double x, const NormalizationParams& p, bool clip) {
    const double u = to_unit_scale(x, p);
    if (clip) {
        return std::clamp(u, 0.0, 1.0);
    }
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("value " + std::to_string(x) + " lies outside the normalization range");
    }
    return u;
}

double to_unit_scale(double x, const NormalizationParams& p) { return (x - p.x_min) / p.range(); }

double angle_encode(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("angle encoding needs x in [0, 1]");
    }
    return 2.0 * std::asin(x);
}

double decode_prediction(double expectation, unsigned num_qubits, const NormalizationParams& p) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("qubit count out of range");
    }
    const double top = static_cast<double>((std::uint64_t{1} << num_qubits) - 1);
    if (!(expectation >= 0.0 && expectation <= top)) {
        throw DomainError("expectation outside [0, 2^n - 1]");
    }
    // Endpoints are returned exactly rather than through the affine formula.
    if (expectation == top) {
        return p.x_max;
    }
    return expectation * (p.range() / top) + p.x_min;
}

}  // namespace qts
