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

#include "qts/dataio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qts/errors.hpp"
#include "qts/random.hpp"

namespace qts {

namespace {

using Kind = ParseError::Kind;

double parse_cell(std::string_view cell, std::size_t line) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (cell.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw ParseError(Kind::BadCell, line, "non-numeric cell '" + std::string(cell) + "'");
    }
    return v;
}

}  // namespace

TimeSeries gen_ar1(double phi, double sigma, std::size_t length, std::uint64_t seed) {
    if (length < 1) {
        throw ArgumentError("series length must be >= 1");
    }
    if (!(sigma >= 0.0) || !std::isfinite(phi) || !std::isfinite(sigma)) {
        throw ArgumentError("need finite phi and sigma >= 0");
    }
    Rng rng(seed);
    TimeSeries series;
    series.label = "ar1";
    series.values.resize(length);
    series.values[0] = 0.0;
    for (std::size_t t = 1; t < length; ++t) {
        series.values[t] = phi * series.values[t - 1] + sigma * rng.normal();
    }
    return series;
}

TimeSeries parse_csv(std::string_view text, std::string label) {
    if (text.empty()) {
        throw ParseError(Kind::EmptyFile, 0, "empty CSV input");
    }
    TimeSeries series;
    series.label = std::move(label);
    std::size_t line = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view row = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line;
        if (!row.empty() && row.back() == '\r') {
            row.remove_suffix(1);
        }
        if (!header_seen) {
            if (row != "t,value") {
                throw ParseError(Kind::MissingHeader, line, "expected header 't,value'");
            }
            header_seen = true;
            continue;
        }
        if (row.empty()) {
            continue;
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(Kind::BadCell, line, "expected two cells");
        }
        parse_cell(row.substr(0, comma), line);
        series.values.push_back(parse_cell(row.substr(comma + 1), line));
    }
    if (series.values.empty()) {
        throw ParseError(Kind::EmptyFile, 0, "CSV has no data rows");
    }
    return series;
}

TimeSeries read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(Kind::Io, 0, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str(), path.stem().string());
}

std::string to_csv(const TimeSeries& series) {
    std::string out = "t,value\n";
    char buf[64];
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, series.values[i]);
        out += buf;
    }
    return out;
}

void write_csv(const TimeSeries& series, const std::filesystem::path& path) {
    write_file_atomic(path, to_csv(series));
}

std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, std::size_t train_len) {
    const std::size_t len = series.values.size();
    if (train_len == 0 || train_len >= len) {
        throw ArgumentError("train length " + std::to_string(train_len) + " must lie in (0, " +
                            std::to_string(len) + ")");
    }
    const auto mid = series.values.begin() + static_cast<std::ptrdiff_t>(train_len);
    return {TimeSeries{{series.values.begin(), mid}, series.label},
            TimeSeries{{mid, series.values.end()}, series.label}};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ParseError(Kind::Io, 0, "cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw ParseError(Kind::Io, 0, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ParseError(Kind::Io, 0, "cannot move output into " + path.string());
    }
}

}  // namespace qts
