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

#include "qts/baselines.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "qts/errors.hpp"

namespace qts {

namespace {

void check_history(std::span<const double> history, std::size_t needed) {
    if (history.size() < needed) {
        throw InsufficientDataError("history has " + std::to_string(history.size()) +
                                    " values, model needs " + std::to_string(needed));
    }
}

std::span<const double> rolling_actuals(std::optional<std::span<const double>> actuals,
                                        std::size_t steps) {
    if (!actuals) {
        throw ArgumentError("rolling forecast needs actual values");
    }
    if (actuals->size() < steps) {
        throw InsufficientDataError("fewer actual values than forecast steps");
    }
    return *actuals;
}

// Drives a one-step predictor over `steps`, extending the history with
// actuals (rolling) or with its own predictions (recursive).
template <typename Predict>
std::vector<double> roll(std::span<const double> history, std::size_t steps, ForecastMode mode,
                         std::optional<std::span<const double>> actuals, Predict&& predict) {
    std::span<const double> observed;
    if (mode == ForecastMode::Rolling && steps > 0) {
        observed = rolling_actuals(actuals, steps);
    }
    std::vector<double> buffer(history.begin(), history.end());
    buffer.reserve(history.size() + steps);
    std::vector<double> out;
    out.reserve(steps);
    for (std::size_t j = 0; j < steps; ++j) {
        const double next = predict(std::span<const double>(buffer));
        out.push_back(next);
        buffer.push_back(mode == ForecastMode::Rolling ? observed[j] : next);
    }
    return out;
}

}  // namespace

double ARModel::predict_next(std::span<const double> history) const {
    check_history(history, coeffs.size());
    double value = intercept;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        value += coeffs[j] * history[history.size() - 1 - j];
    }
    return value;
}

ARModel fit_ar(std::span<const double> series, unsigned p) {
    if (p < 1) {
        throw ArgumentError("AR order must be >= 1");
    }
    if (series.size() < std::size_t{p} + 2) {
        throw InsufficientDataError("AR(" + std::to_string(p) + ") needs at least " +
                                    std::to_string(p + 2) + " values");
    }
    const auto rows = static_cast<Eigen::Index>(series.size() - p);
    const auto cols = static_cast<Eigen::Index>(p + 1);
    if (rows < cols) {
        throw FitError("AR(" + std::to_string(p) + ") design has fewer rows than parameters");
    }
    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd target(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const std::size_t t = static_cast<std::size_t>(r) + p;
        design(r, 0) = 1.0;
        for (unsigned j = 0; j < p; ++j) {
            design(r, j + 1) = series[t - 1 - j];
        }
        target(r) = series[t];
    }
    const Eigen::MatrixXd gram = design.transpose() * design;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    const Eigen::VectorXd pivots = ldlt.vectorD().cwiseAbs();
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        pivots.minCoeff() <= 1e-12 * pivots.maxCoeff()) {
        throw FitError("AR(" + std::to_string(p) + ") design matrix is rank deficient");
    }
    const Eigen::VectorXd beta = ldlt.solve(design.transpose() * target);
    if (!beta.allFinite()) {
        throw FitError("AR(" + std::to_string(p) + ") fit produced non-finite coefficients");
    }
    ARModel model;
    model.intercept = beta(0);
    model.coeffs.assign(beta.data() + 1, beta.data() + beta.size());
    return model;
}

std::vector<double> ar_forecast(const ARModel& model, std::span<const double> history,
                                std::size_t steps, ForecastMode mode,
                                std::optional<std::span<const double>> actuals) {
    check_history(history, model.order());
    return roll(history, steps, mode, actuals,
                [&](std::span<const double> h) { return model.predict_next(h); });
}

std::vector<double> difference(std::span<const double> series) {
    std::vector<double> out;
    if (series.size() < 2) {
        return out;
    }
    out.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) {
        out.push_back(series[i] - series[i - 1]);
    }
    return out;
}

std::vector<double> integrate(std::span<const double> diffs, double anchor) {
    std::vector<double> out;
    out.reserve(diffs.size() + 1);
    out.push_back(anchor);
    for (double d : diffs) {
        out.push_back(out.back() + d);
    }
    return out;
}

ARIMAModel fit_arima_p10(std::span<const double> series, unsigned p) {
    if (series.size() < std::size_t{p} + 3) {
        throw InsufficientDataError("ARIMA(" + std::to_string(p) + ",1,0) needs at least " +
                                    std::to_string(p + 3) + " values");
    }
    const std::vector<double> diffs = difference(series);
    ARIMAModel model;
    model.anchor = series.back();
    const auto [lo, hi] = std::minmax_element(diffs.begin(), diffs.end());
    const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
    if (*hi - *lo <= 1e-12 * scale) {
        // Constant step: lags carry no information, the drift is the step itself.
        model.inner.coeffs.assign(p, 0.0);
        model.inner.intercept = diffs.front();
        return model;
    }
    model.inner = fit_ar(diffs, p);
    return model;
}

std::vector<double> arima_forecast(const ARIMAModel& model, std::span<const double> history,
                                   std::size_t steps, ForecastMode mode,
                                   std::optional<std::span<const double>> actuals) {
    check_history(history, std::size_t{model.inner.order()} + 1);
    const std::size_t p = model.inner.order();
    return roll(history, steps, mode, actuals, [&](std::span<const double> h) {
        const std::vector<double> recent = difference(h.subspan(h.size() - p - 1));
        return h.back() + model.inner.predict_next(recent);
    });
}

std::vector<double> naive_forecast(std::span<const double> history, std::size_t steps,
                                   ForecastMode mode,
                                   std::optional<std::span<const double>> actuals) {
    check_history(history, 1);
    return roll(history, steps, mode, actuals,
                [](std::span<const double> h) { return h.back(); });
}

double mse(std::span<const double> predictions, std::span<const double> actuals) {
    if (predictions.empty() || predictions.size() != actuals.size()) {
        throw ArgumentError("mse needs two non-empty sequences of equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double e = predictions[i] - actuals[i];
        sum += e * e;
    }
    return sum / static_cast<double>(predictions.size());
}

double normalized_mse(std::span<const double> predictions, std::span<const double> actuals,
                      const NormalizationParams& params) {
    if (predictions.size() != actuals.size()) {
        throw ArgumentError("mse needs two non-empty sequences of equal length");
    }
    std::vector<double> a(predictions.size());
    std::vector<double> b(actuals.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = to_unit_scale(predictions[i], params);
        b[i] = to_unit_scale(actuals[i], params);
    }
    return mse(a, b);
}

}  // namespace qts
