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

#include "qts/transpile.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "qts/errors.hpp"

namespace qts {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_angles(unsigned n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::vector<double> out(n);
    for (auto& a : out) a = angle(gen);
    return out;
}

// Dense-matrix oracle: distance between two unitaries up to global phase.
double dense_phase_distance(const testing::CMatrix& a, const testing::CMatrix& b) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const std::complex<double> phase = a(r, c) / b(r, c);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

TEST(DecomposeRyTest, ShapeIsTwoRzTwoSx) {
    const auto ops = decompose_ry(0.3, 2);
    ASSERT_EQ(ops.size(), 4u);
    int rz = 0;
    int sx = 0;
    for (const auto& op : ops) {
        EXPECT_EQ(op.q0, 2u);
        rz += op.kind == GateKind::RZ;
        sx += op.kind == GateKind::SX;
    }
    EXPECT_EQ(rz, 2);
    EXPECT_EQ(sx, 2);
}

TEST(DecomposeRyTest, IdentityAndFlip) {
    EXPECT_LE(phase_aligned_distance(sequence_matrix(decompose_ry(0.0)), identity_matrix()), 1e-10);
    const Matrix2 m = sequence_matrix(decompose_ry(kPi));
    // |0> maps to |1> up to phase.
    EXPECT_NEAR(std::abs(m[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m[2]), 1.0, 1e-12);
}

TEST(DecomposeRyTest, MatchesRyForRandomAngles) {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    for (int i = 0; i < 100; ++i) {
        const double theta = angle(gen);
        const auto ops = decompose_ry(theta);
        EXPECT_LE(phase_aligned_distance(sequence_matrix(ops), ry_matrix(theta)), 1e-10);

        // Independent check on dense matrices.
        Circuit lowered(1);
        for (const auto& op : ops) lowered.append(op);
        Circuit ry(1);
        ry.append(GateOp::ry(0, theta));
        EXPECT_LE(dense_phase_distance(testing::circuit_unitary(lowered),
                                       testing::circuit_unitary(ry)),
                  1e-10);
    }
}

TEST(TranspileTest, Counts) {
    const auto full = build_qts_circuit(random_angles(10, 1), Variant::Full);
    EXPECT_EQ(gate_counts(transpile(full)), (GateCounts{40, 13}));
    const auto one = build_qts_circuit(random_angles(1, 2), Variant::RotOnly);
    EXPECT_EQ(gate_counts(transpile(one)), (GateCounts{4, 0}));
    const auto fwd = build_qts_circuit(random_angles(10, 3), Variant::Forward);
    EXPECT_EQ(gate_counts(transpile(fwd)), (GateCounts{40, 9}));
}

TEST(TranspileTest, OutputUsesBasisAndKeepsCxVerbatim) {
    const auto c = build_qts_circuit(random_angles(6, 4), Variant::Full);
    const auto t = transpile(c);
    std::vector<GateOp> cx_in;
    std::vector<GateOp> cx_out;
    for (const auto& op : c.ops()) if (op.kind == GateKind::CX) cx_in.push_back(op);
    for (const auto& op : t.ops()) {
        EXPECT_TRUE(Basis::native().contains(op.kind));
        EXPECT_NE(op.kind, GateKind::RY);
        if (op.kind == GateKind::CX) cx_out.push_back(op);
    }
    EXPECT_EQ(cx_in, cx_out);
}

TEST(TranspileTest, RejectsNonQtsInput) {
    Circuit c(1);
    c.append(GateOp::sx(0));
    EXPECT_THROW(transpile(c), ValidationError);
}

TEST(BasisTest, RequiresCxRzSx) {
    EXPECT_THROW((Basis{GateKind::RZ, GateKind::SX}), ValidationError);
    EXPECT_THROW((Basis{GateKind::CX, GateKind::SX}), ValidationError);
    EXPECT_NO_THROW((Basis{GateKind::CX, GateKind::SX, GateKind::RZ}));
}

TEST(VerifyEquivalenceTest, SelfIsZero) {
    const auto c = build_qts_circuit(random_angles(5, 5), Variant::Full);
    EXPECT_LE(verify_equivalence(c, c, 20, 1), 1e-15);
}

TEST(VerifyEquivalenceTest, TranspiledMatchesOriginal) {
    const auto c = build_qts_circuit(random_angles(10, 6), Variant::Full);
    EXPECT_LE(verify_equivalence(c, transpile(c), 20, 2), kEquivalenceTolerance);
}

TEST(VerifyEquivalenceTest, DistinctUnitariesDetected) {
    const std::vector<double> thetas(10, kPi / 2);
    const auto full = build_qts_circuit(thetas, Variant::Full);
    const auto fwd = build_qts_circuit(thetas, Variant::Forward);
    EXPECT_GT(verify_equivalence(full, fwd, 10, 3), 1e-3);
    EXPECT_THROW(verify_equivalence(full, Circuit(3), 1, 0), SizeError);
}

// Count and fidelity laws for every size and variant.
TEST(TranspileProperty, CountAndFidelityLaws) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (Variant v : {Variant::RotOnly, Variant::Forward, Variant::Full}) {
            const auto c = build_qts_circuit(random_angles(n, 31 * n), v);
            const auto t = transpile(c);
            const GateCounts before = gate_counts(c);
            const GateCounts after = gate_counts(t);
            EXPECT_EQ(after.single_qubit, 4 * before.single_qubit);
            EXPECT_EQ(after.two_qubit, before.two_qubit);
            EXPECT_LE(verify_equivalence(c, t, 5, n), kEquivalenceTolerance);
        }
    }
}

}  // namespace
}  // namespace qts
