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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qts/circuit.hpp"
#include "qts/errors.hpp"

namespace qts {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(FitNormParamsTest, Examples) {
    EXPECT_EQ(fit_norm_params(std::vector<double>{2, 4, 6}), (NormalizationParams{2, 6}));
    EXPECT_EQ(fit_norm_params(std::vector<double>{0, 1}), (NormalizationParams{0, 1}));
    EXPECT_THROW(fit_norm_params(std::vector<double>{5, 5, 5}), DegenerateRangeError);
    EXPECT_THROW(fit_norm_params(std::vector<double>{5}), InsufficientDataError);
}

TEST(NormalizeTest, Examples) {
    const NormalizationParams p{2, 6};
    EXPECT_DOUBLE_EQ(normalize(4, p, false), 0.5);
    EXPECT_DOUBLE_EQ(normalize(6, p, false), 1.0);
    EXPECT_DOUBLE_EQ(normalize(7, p, true), 1.0);
    EXPECT_DOUBLE_EQ(normalize(1, p, true), 0.0);
    EXPECT_THROW(normalize(7, p, false), DomainError);
}

TEST(AngleEncodeTest, Examples) {
    EXPECT_DOUBLE_EQ(angle_encode(0.0), 0.0);
    EXPECT_DOUBLE_EQ(angle_encode(1.0), kPi);
    EXPECT_NEAR(angle_encode(0.5), kPi / 3, 1e-15);
    EXPECT_THROW(angle_encode(-0.01), DomainError);
    EXPECT_THROW(angle_encode(1.01), DomainError);
}

TEST(AngleEncodeTest, StrictlyIncreasing) {
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double theta = angle_encode(i / 1000.0);
        EXPECT_GT(theta, prev);
        EXPECT_GE(theta, 0.0);
        EXPECT_LE(theta, kPi);
        prev = theta;
    }
}

TEST(AngleEncodeTest, SingleQubitProbabilityIsSquare) {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double x = unit(gen);
        const std::vector<double> theta{angle_encode(x)};
        const ProbDist d = probabilities(run(build_qts_circuit(theta, Variant::RotOnly)));
        EXPECT_NEAR(d[1], x * x, 1e-12);
    }
}

TEST(DecodePredictionTest, Examples) {
    const NormalizationParams p{-3.5, 12.25};
    EXPECT_EQ(decode_prediction(0.0, 10, p), p.x_min);
    EXPECT_EQ(decode_prediction(1023.0, 10, p), p.x_max);
    EXPECT_DOUBLE_EQ(decode_prediction(1.5, 2, {0, 3}), 1.5);
    EXPECT_THROW(decode_prediction(4.0, 2, {0, 3}), DomainError);
    EXPECT_THROW(decode_prediction(-0.1, 2, {0, 3}), DomainError);
}

TEST(DecodePredictionTest, AnchorsAreExactForRandomRanges) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> raw(-1e4, 1e4);
    for (int i = 0; i < 50; ++i) {
        double a = raw(gen);
        double b = raw(gen);
        if (a > b) std::swap(a, b);
        const NormalizationParams p = make_norm_params(a, b);
        for (unsigned n : {1u, 5u, 10u, 24u}) {
            const double top = static_cast<double>((std::uint64_t{1} << n) - 1);
            EXPECT_EQ(decode_prediction(0.0, n, p), a);
            EXPECT_EQ(decode_prediction(top, n, p), b);
        }
    }
}

TEST(DecodePredictionTest, AffineAndIncreasing) {
    const NormalizationParams p{10, 20};
    double prev = -1e300;
    for (int i = 0; i <= 1023; ++i) {
        const double v = decode_prediction(i, 10, p);
        EXPECT_GT(v, prev);
        EXPECT_NEAR(v, 10 + i * 10.0 / 1023.0, 1e-12);
        prev = v;
    }
}

TEST(MakeNormParamsTest, RejectsDegenerate) {
    EXPECT_THROW(make_norm_params(1, 1), DegenerateRangeError);
    EXPECT_THROW(make_norm_params(2, 1), DegenerateRangeError);
    EXPECT_THROW(make_norm_params(0, INFINITY), DegenerateRangeError);
}

}  // namespace
}  // namespace qts
