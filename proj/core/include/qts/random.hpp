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
 * Portable seeded random streams.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. The standard library distributions are not portable, so uniform
 * and normal variates are derived here with explicit formulas:
 *
 *   uniform  = (engine() >> 11) * 2^-53            in [0, 1)
 *   normal   = Box-Muller on (1 - u1, u2), both branches used in order
 *
 * Child streams are derived from (master seed, stream index) with the
 * SplitMix64 finalizer, so parallel work never shares generator state.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace qts {

/// SplitMix64 output function applied to `x`.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for child stream `stream` of `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Child generator for an independent stream.
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    double uniform();
    double normal();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

}  // namespace qts
