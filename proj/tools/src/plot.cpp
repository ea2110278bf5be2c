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
#include <limits>
#include <sstream>

#include "json.hpp"
#include "qts/errors.hpp"
#include "qts_cli/cli.hpp"

namespace qts::cli {

namespace {

using Json = nlohmann::json;

constexpr double kWidth = 800;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 30;
constexpr double kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::vector<double> numbers(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw ParseError(ParseError::Kind::BadCell, 0, std::string(what) + " must be an array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw ParseError(ParseError::Kind::BadCell, 0, std::string(what) + " holds a non-number");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void collect_plot_series(const std::string& json_text, const std::string& fallback_label,
                         std::optional<std::vector<double>>& actuals,
                         std::vector<PlotSeries>& predictions) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ParseError(ParseError::Kind::BadCell, 0, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("meta")) {
        throw ParseError(ParseError::Kind::MissingHeader, 0, "JSON document lacks a meta object");
    }
    const Json& meta = doc["meta"];
    if (doc.contains("models")) {
        if (!actuals && meta.contains("actuals")) {
            actuals = numbers(meta["actuals"], "meta.actuals");
        }
        for (const auto& m : doc["models"]) {
            if (!m.contains("name") || !m.contains("predictions")) {
                throw ParseError(ParseError::Kind::BadCell, 0, "model entry lacks name or predictions");
            }
            predictions.push_back({m["name"].get<std::string>(), numbers(m["predictions"], "predictions")});
        }
        return;
    }
    if (!doc.contains("predictions")) {
        throw ParseError(ParseError::Kind::BadCell, 0, "forecast document lacks predictions");
    }
    if (!actuals && doc.contains("actuals")) {
        actuals = numbers(doc["actuals"], "actuals");
    }
    std::string label = fallback_label;
    if (meta.contains("variant") && meta["variant"].is_string()) {
        label = "qts-" + meta["variant"].get<std::string>();
    }
    predictions.push_back({label, numbers(doc["predictions"], "predictions")});
}

std::string render_svg(const std::vector<double>& actuals, const std::vector<PlotSeries>& predictions) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::size_t count = actuals.size();
    auto extend = [&](const std::vector<double>& v) {
        for (double x : v) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        count = std::max(count, v.size());
    };
    extend(actuals);
    for (const auto& p : predictions) extend(p.values);
    if (!std::isfinite(lo)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (hi - lo <= 0.0) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](std::size_t i) {
        return kLeft + (count > 1 ? plot_w * double(i) / double(count - 1) : plot_w / 2);
    };
    auto py = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };
    auto points = [&](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += fmt(px(i)) + "," + fmt(py(v[i]));
        }
        return s;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\"/>\n</g>\n";
    svg << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        char label[32];
        std::snprintf(label, sizeof label, "%.4g", v);
        svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(py(v) + 4) << "\" text-anchor=\"end\">"
            << label << "</text>\n";
    }
    for (std::size_t i = 0; i < count; ++i) {
        svg << "<text x=\"" << fmt(px(i)) << "\" y=\"" << kTop + plot_h + 16
            << "\" text-anchor=\"middle\">" << i + 1 << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\">forecast step</text>\n</g>\n";

    struct Legend {
        std::string label;
        std::string color;
    };
    std::vector<Legend> legend;
    if (!actuals.empty()) {
        svg << "<polyline class=\"actual\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
            << points(actuals) << "\"/>\n";
        legend.push_back({"actual", "black"});
    }
    std::size_t color = 0;
    for (const auto& p : predictions) {
        if (p.values.empty()) {
            continue;
        }
        const std::string c = kPalette[color++ % std::size(kPalette)];
        svg << "<polyline class=\"prediction\" data-label=\"" << escape(p.label)
            << "\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"" << points(p.values)
            << "\"/>\n";
        legend.push_back({p.label, c});
    }
    svg << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < legend.size(); ++i) {
        const double y = kTop + 10 + 20 * double(i);
        svg << "<rect x=\"" << kWidth - kRight + 15 << "\" y=\"" << y - 9 << "\" width=\"14\" height=\"4\" fill=\""
            << legend[i].color << "\"/>\n"
            << "<text x=\"" << kWidth - kRight + 35 << "\" y=\"" << y - 3 << "\">" << escape(legend[i].label)
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace qts::cli
