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
 * Min-max normalization, angle encoding and expectation decoding.
 *
 * A normalized value x in [0, 1] is encoded as RY(2 asin x), so the qubit's
 * |1> amplitude is x and P(1) = x^2. An expectation E over basis indices of
 * an n-qubit register decodes to
 *
 *   x_hat = E * (x_max - x_min) / (2^n - 1) + x_min.
 */

#pragma once

#include <span>

namespace qts {

struct NormalizationParams {
    double x_min = 0.0;
    double x_max = 1.0;

    double range() const noexcept { return x_max - x_min; }

    friend bool operator==(const NormalizationParams&, const NormalizationParams&) = default;
};

/// Throws DegenerateRangeError unless x_max > x_min and both are finite.
NormalizationParams make_norm_params(double x_min, double x_max);

/// Min and max of `train`. Needs >= 2 values, not all equal.
NormalizationParams fit_norm_params(std::span<const double> train);

/// (x - x_min) / (x_max - x_min). With `clip` the result is clamped to [0, 1];
/// without it an out-of-range result throws DomainError.
double normalize(double x, const NormalizationParams& p, bool clip);

/// Affine map onto the training scale with no range check. Used for error metrics.
double to_unit_scale(double x, const NormalizationParams& p);

/// 2 asin(x) in [0, pi]. Throws DomainError outside [0, 1].
double angle_encode(double x);

/// Maps an expectation in [0, 2^n - 1] back to raw units.
double decode_prediction(double expectation, unsigned num_qubits, const NormalizationParams& p);

}  // namespace qts
