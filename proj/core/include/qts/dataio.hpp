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
 * Synthetic AR(1) generation, CSV ingestion/emission and train/test splits.
 *
 * CSV schema: a header line exactly `t,value`, then one `index,value` row per
 * observation. Decimal-point floats, `\n` line endings.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qts {

struct TimeSeries {
    std::vector<double> values;
    std::string label;
};

/// z_0 = 0, z_t = phi * z_{t-1} + sigma * N(0, 1); the normal draws come from Rng(seed).
TimeSeries gen_ar1(double phi, double sigma, std::size_t length, std::uint64_t seed);

TimeSeries parse_csv(std::string_view text, std::string label = {});
TimeSeries read_csv(const std::filesystem::path& path);

std::string to_csv(const TimeSeries& series);
void write_csv(const TimeSeries& series, const std::filesystem::path& path);

/// Contiguous prefix/suffix split. Needs 0 < train_len < length.
std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, std::size_t train_len);

/// Writes through a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qts
