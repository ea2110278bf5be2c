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
 * Classical comparison models: AR(p) by ordinary least squares with an
 * intercept, ARIMA(p,1,0) as AR(p) on first differences, a last-value
 * predictor, and the mean squared error.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qts/encoding.hpp"
#include "qts/forecast.hpp"

namespace qts {

struct ARModel {
    /// Lag weights, newest lag first.
    std::vector<double> coeffs;
    double intercept = 0.0;

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs.size()); }

    /// intercept + sum_j coeffs[j] * history[end - 1 - j]
    double predict_next(std::span<const double> history) const;
};

/// OLS on the lag design matrix [1, x_{t-1}, ..., x_{t-p}] via the normal
/// equations. Throws InsufficientDataError when series.size() < p + 2 and
/// FitError when the design is rank deficient.
ARModel fit_ar(std::span<const double> series, unsigned p);

/// Rolling consumes `actuals` (required, at least `steps` long) as the
/// history advances; recursive feeds predictions back.
std::vector<double> ar_forecast(const ARModel& model, std::span<const double> history,
                                std::size_t steps, ForecastMode mode,
                                std::optional<std::span<const double>> actuals = std::nullopt);

struct ARIMAModel {
    ARModel inner;  // fitted on the differenced series
    unsigned d = 1;
    double anchor = 0.0;  // last raw training value
};

/// ARIMA(p,1,0): difference once, fit AR(p) on the differences. When the
/// differences are constant (exact trend or flat series) the lag weights are
/// zero and the intercept carries the constant step.
ARIMAModel fit_arima_p10(std::span<const double> series, unsigned p);

/// Forecasts in raw units; `history` is the raw series up to the forecast origin.
std::vector<double> arima_forecast(const ARIMAModel& model, std::span<const double> history,
                                   std::size_t steps, ForecastMode mode,
                                   std::optional<std::span<const double>> actuals = std::nullopt);

/// Repeats the most recent observed value.
std::vector<double> naive_forecast(std::span<const double> history, std::size_t steps,
                                   ForecastMode mode,
                                   std::optional<std::span<const double>> actuals = std::nullopt);

std::vector<double> difference(std::span<const double> series);
/// Inverse of difference(): anchor followed by its running sums.
std::vector<double> integrate(std::span<const double> diffs, double anchor);

/// Throws ArgumentError for empty or mismatched inputs.
double mse(std::span<const double> predictions, std::span<const double> actuals);

/// MSE after mapping both sequences through the training normalization.
double normalized_mse(std::span<const double> predictions, std::span<const double> actuals,
                      const NormalizationParams& params);

}  // namespace qts
