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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qts/errors.hpp"
#include "qts/random.hpp"

namespace qts {

Basis::Basis(std::initializer_list<GateKind> kinds) : Basis(std::set<GateKind>(kinds)) {}

Basis::Basis(std::set<GateKind> kinds) : kinds_(std::move(kinds)) {
    if (!contains(GateKind::CX) || !contains(GateKind::RZ) || !contains(GateKind::SX)) {
        throw ValidationError("basis must contain CX, RZ and SX");
    }
}

Basis Basis::native() { return Basis{GateKind::RZ, GateKind::SX, GateKind::X, GateKind::CX}; }

std::vector<GateOp> decompose_ry(double theta, unsigned qubit) {
    constexpr double pi = std::numbers::pi;
    return {GateOp::sx(qubit), GateOp::rz(qubit, theta + pi), GateOp::sx(qubit),
            GateOp::rz(qubit, pi)};
}

Matrix2 sequence_matrix(const std::vector<GateOp>& ops) {
    Matrix2 m = identity_matrix();
    for (const auto& op : ops) {
        Matrix2 g;
        switch (op.kind) {
            case GateKind::RY: g = ry_matrix(op.angle); break;
            case GateKind::RZ: g = rz_matrix(op.angle); break;
            case GateKind::SX: g = sx_matrix(); break;
            case GateKind::X: g = x_matrix(); break;
            case GateKind::CX: throw ArgumentError("sequence_matrix takes single-qubit gates only");
        }
        m = multiply(g, m);
    }
    return m;
}

double phase_aligned_distance(const Matrix2& a, const Matrix2& b) {
    // Align on the largest entry of b; unitaries never have all entries small.
    const auto it = std::max_element(b.begin(), b.end(), [](const Complex& x, const Complex& y) {
        return std::abs(x) < std::abs(y);
    });
    const auto idx = static_cast<std::size_t>(it - b.begin());
    Complex phase{1.0};
    if (std::abs(a[idx]) > 0.0) {
        phase = a[idx] / std::abs(a[idx]) * std::abs(b[idx]) / b[idx];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

Circuit transpile(const Circuit& circuit, const Basis& basis) {
    Circuit out(circuit.num_qubits());
    for (const auto& op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::RY:
                for (const auto& g : decompose_ry(op.angle, op.q0)) {
                    out.append(g);
                }
                break;
            case GateKind::CX:
                out.append(op);
                break;
            default:
                throw ValidationError("transpile input must contain only RY and CX, found " +
                                      std::string(to_string(op.kind)));
        }
    }
    for (const auto& op : out.ops()) {
        if (!basis.contains(op.kind)) {
            throw ValidationError("basis lacks " + std::string(to_string(op.kind)));
        }
    }
    return out;
}

double verify_equivalence(const Circuit& a, const Circuit& b, unsigned trials,
                          std::uint64_t seed) {
    if (a.num_qubits() != b.num_qubits()) {
        throw SizeError("circuits act on different qubit counts");
    }
    const unsigned n = a.num_qubits();
    Rng rng(seed);
    double worst = 0.0;
    for (unsigned t = 0; t < trials; ++t) {
        StateVector input(n);
        for (unsigned q = 0; q < n; ++q) {
            input.apply_ry(q, std::numbers::pi * rng.uniform());
            input.apply_rz(q, 2.0 * std::numbers::pi * rng.uniform());
        }
        StateVector sa = input;
        StateVector sb = std::move(input);
        apply_circuit(a, sa);
        apply_circuit(b, sb);
        Complex overlap{};
        const auto va = sa.amplitudes();
        const auto vb = sb.amplitudes();
        for (std::size_t k = 0; k < va.size(); ++k) {
            overlap += std::conj(va[k]) * vb[k];
        }
        worst = std::max(worst, std::max(0.0, 1.0 - std::abs(overlap)));
    }
    return worst;
}

}  // namespace qts
