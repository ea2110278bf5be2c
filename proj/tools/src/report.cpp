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
#include <cmath>
#include <cstdio>
#include <span>

#include "json.hpp"
#include "qts/errors.hpp"
#include "qts_cli/cli.hpp"

namespace qts::cli {

namespace {

using Json = nlohmann::ordered_json;

void require_finite(const Json& j) {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        throw DomainError("refusing to serialize a non-finite value");
    }
    if (j.is_structured()) {
        for (const auto& child : j) {
            require_finite(child);
        }
    }
}

// Pretty printer matching nlohmann's two-space layout, except that floats
// are written with 17 significant digits.
void emit(const Json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(key).dump() + ": ";
            emit(value, depth + 1, out);
        }
        out += "\n" + close + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) out += ",\n";
            out += pad;
            emit(j[i], depth + 1, out);
        }
        out += "\n" + close + "]";
    } else if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        out += buf;
    } else {
        out += j.dump();
    }
}

std::string dump(const Json& j) {
    require_finite(j);
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

Json exec_json(const ExecConfig& exec) {
    Json j;
    j["shots"] = exec.shots;
    j["seed"] = exec.seed;
    if (exec.noise) {
        j["noise"] = {{"two_qubit_depol", exec.noise->two_qubit_depol},
                      {"readout_flip", exec.noise->readout_flip},
                      {"trajectories", exec.noise->trajectories}};
    } else {
        j["noise"] = nullptr;
    }
    return j;
}

Json ar_config(unsigned order, const ARModel& m, int d) {
    Json j;
    j["order"] = {order, d, 0};
    j["coeffs"] = m.coeffs;
    j["intercept"] = m.intercept;
    return j;
}

}  // namespace

const std::vector<std::string>& known_models() {
    static const std::vector<std::string> models{"ar1",     "ar2",     "ar3",     "arima210",
                                                 "qts-rot", "qts-fwd", "qts-full"};
    return models;
}

BenchmarkReport run_benchmark(const TimeSeries& series, const BenchmarkRequest& request,
                              const std::string& input_label) {
    const std::size_t train_len = request.train_len;
    const std::size_t steps = request.steps;
    if (train_len < 2 || series.values.size() < train_len + steps) {
        throw InsufficientDataError("benchmark needs train_len >= 2 and train_len + steps <= series length");
    }
    const std::span<const double> all(series.values);
    const auto train = all.first(train_len);
    const auto test = all.subspan(train_len, steps);

    BenchmarkReport report;
    report.input = input_label;
    report.seed = request.exec.seed;
    report.train_len = train_len;
    report.steps = steps;
    report.num_qubits = window_size_for(train_len);
    report.mode = request.mode;
    report.params = fit_norm_params(train);
    report.actuals.assign(test.begin(), test.end());

    auto score = [&](const std::vector<double>& pred) {
        return steps == 0 ? 0.0 : normalized_mse(pred, test, report.params);
    };

    for (const std::string& name : request.models) {
        ModelEntry entry;
        entry.name = name;
        Json config;
        if (name == "ar1" || name == "ar2" || name == "ar3") {
            const auto p = static_cast<unsigned>(name[2] - '0');
            const ARModel m = fit_ar(train, p);
            entry.predictions = ar_forecast(m, train, steps, request.mode, test);
            config = ar_config(p, m, 0);
        } else if (name == "arima210") {
            const ARIMAModel m = fit_arima_p10(train, 2);
            entry.predictions = arima_forecast(m, train, steps, request.mode, test);
            config = ar_config(2, m.inner, 1);
        } else if (name.rfind("qts-", 0) == 0) {
            ForecastRequest fr;
            fr.train_len = train_len;
            fr.steps = steps;
            fr.variant = parse_variant(name.substr(4));
            fr.mode = request.mode;
            fr.exec = request.exec;
            const ForecastResult res = forecast_many(series.values, fr);
            entry.predictions = res.predictions;
            config["variant"] = std::string(to_string(fr.variant));
            config["n"] = res.num_qubits;
            config["exec"] = exec_json(fr.exec);
        } else {
            throw ArgumentError("unknown model '" + name + "'");
        }
        entry.mse = score(entry.predictions);
        entry.config_json = config.dump();
        report.models.push_back(std::move(entry));
    }
    return report;
}

std::string forecast_json(const ForecastResult& result, const std::string& input_label) {
    const ForecastRequest& r = result.request;
    Json j;
    j["meta"] = {{"input", input_label},
                 {"variant", std::string(to_string(r.variant))},
                 {"mode", std::string(to_string(r.mode))},
                 {"train_len", r.train_len},
                 {"steps", r.steps},
                 {"n", result.num_qubits},
                 {"x_min", result.params.x_min},
                 {"x_max", result.params.x_max},
                 {"exec", exec_json(r.exec)}};
    j["predictions"] = result.predictions;
    j["actuals"] = result.actuals;
    if (result.mse) {
        j["mse"] = *result.mse;
    } else {
        j["mse"] = nullptr;
    }
    return dump(j);
}

std::string benchmark_json(const BenchmarkReport& report) {
    Json j;
    j["meta"] = {{"input", report.input},
                 {"seed", report.seed},
                 {"train_len", report.train_len},
                 {"steps", report.steps},
                 {"n", report.num_qubits},
                 {"mode", std::string(to_string(report.mode))},
                 {"x_min", report.params.x_min},
                 {"x_max", report.params.x_max},
                 {"actuals", report.actuals}};
    j["models"] = Json::array();
    for (const auto& m : report.models) {
        Json entry;
        entry["name"] = m.name;
        entry["mse"] = m.mse;
        entry["predictions"] = m.predictions;
        entry["config"] = Json::parse(m.config_json);
        j["models"].push_back(std::move(entry));
    }
    return dump(j);
}

std::string benchmark_table_csv(const BenchmarkReport& report) {
    std::string out = "model,mse\n";
    char buf[64];
    for (const auto& m : report.models) {
        if (!std::isfinite(m.mse)) {
            throw DomainError("non-finite MSE for " + m.name);
        }
        std::snprintf(buf, sizeof buf, ",%.17g\n", m.mse);
        out += m.name + buf;
    }
    return out;
}

}  // namespace qts::cli
