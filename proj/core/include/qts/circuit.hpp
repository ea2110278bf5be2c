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
 * Gate-list circuit representation and the QTS circuit family.
 *
 * A QTS circuit places one RY(theta_j) on every qubit j, then an entangling
 * block of parameter-free CX gates:
 *
 *   Forward : (q, q+1) for q = 0 .. n-2
 *   Full    : Forward, then cross edges (q, q+2) for odd q with q+2 <= n-1
 *
 * Qubit j carries lag j+1, so qubit 0 holds the most recent observation.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qts/statevec.hpp"

namespace qts {

enum class GateKind { RY, RZ, SX, X, CX };

std::string_view to_string(GateKind kind);

struct GateOp {
    GateKind kind;
    unsigned q0 = 0;
    unsigned q1 = 0;  // CX target; unused otherwise
    double angle = 0.0;  // RY/RZ only

    static GateOp ry(unsigned q, double theta) { return {GateKind::RY, q, 0, theta}; }
    static GateOp rz(unsigned q, double theta) { return {GateKind::RZ, q, 0, theta}; }
    static GateOp sx(unsigned q) { return {GateKind::SX, q, 0, 0.0}; }
    static GateOp x(unsigned q) { return {GateKind::X, q, 0, 0.0}; }
    static GateOp cx(unsigned control, unsigned target) {
        return {GateKind::CX, control, target, 0.0};
    }

    unsigned arity() const noexcept { return kind == GateKind::CX ? 2 : 1; }
    bool has_angle() const noexcept { return kind == GateKind::RY || kind == GateKind::RZ; }

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

enum class Variant { RotOnly, Forward, Full };

std::string_view to_string(Variant v);
/// Accepts "rot", "fwd", "full". Throws ArgumentError otherwise.
Variant parse_variant(std::string_view token);

class Circuit {
public:
    explicit Circuit(unsigned num_qubits);

    /// Appends `op` after checking qubit indices, CX distinctness and angle finiteness.
    void append(const GateOp& op);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    const std::vector<GateOp>& ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    unsigned num_qubits_;
    std::vector<GateOp> ops_;
};

struct EntanglementConfig {
    /// Qubit separation of the cross edges. Only 2 is used by the default family.
    unsigned cross_stride = 2;
};

using Edge = std::pair<unsigned, unsigned>;

std::vector<Edge> entanglement_edges(unsigned num_qubits, Variant variant,
                                     const EntanglementConfig& config = {});

/// Throws ArgumentError on empty `thetas`.
Circuit build_qts_circuit(std::span<const double> thetas, Variant variant,
                          const EntanglementConfig& config = {});

/// Applies every op of `circuit` to `state` in order.
void apply_circuit(const Circuit& circuit, StateVector& state);

/// Runs `circuit` from |0...0>.
StateVector run(const Circuit& circuit);

struct GateCounts {
    std::size_t single_qubit = 0;
    std::size_t two_qubit = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const Circuit& circuit);

/// Line-oriented text form: a `QUBITS n` header, then one op per line,
/// e.g. `RY q0 1.5707963267948966` or `CX q0 q1`. Angles use 17 significant digits.
std::string to_text(const Circuit& circuit);
void write_text(const Circuit& circuit, std::ostream& out);

/// Parses the text form. The header is optional; without it the register
/// size is one past the largest qubit index. `#` starts a comment.
Circuit parse_circuit_text(std::string_view text);

}  // namespace qts
