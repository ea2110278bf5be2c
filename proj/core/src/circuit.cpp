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

#include "qts/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qts/errors.hpp"

namespace qts {

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::SX: return "SX";
        case GateKind::X: return "X";
        case GateKind::CX: return "CX";
    }
    return "?";
}

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::RotOnly: return "rot";
        case Variant::Forward: return "fwd";
        case Variant::Full: return "full";
    }
    return "?";
}

Variant parse_variant(std::string_view token) {
    if (token == "rot") return Variant::RotOnly;
    if (token == "fwd") return Variant::Forward;
    if (token == "full") return Variant::Full;
    throw ArgumentError("unknown variant '" + std::string(token) + "' (expected rot|fwd|full)");
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

void Circuit::append(const GateOp& op) {
    if (op.q0 >= num_qubits_ || (op.arity() == 2 && op.q1 >= num_qubits_)) {
        throw ValidationError("gate qubit index out of range");
    }
    if (op.kind == GateKind::CX && op.q0 == op.q1) {
        throw ValidationError("CX control and target must differ");
    }
    if (op.has_angle() && !std::isfinite(op.angle)) {
        throw ValidationError("rotation angle must be finite");
    }
    ops_.push_back(op);
}

std::vector<Edge> entanglement_edges(unsigned num_qubits, Variant variant,
                                     const EntanglementConfig& config) {
    std::vector<Edge> edges;
    if (variant == Variant::RotOnly || num_qubits < 2) {
        return edges;
    }
    for (unsigned q = 0; q + 1 < num_qubits; ++q) {
        edges.emplace_back(q, q + 1);
    }
    if (variant == Variant::Full) {
        if (config.cross_stride < 2) {
            throw ArgumentError("cross stride must be >= 2");
        }
        // Odd 0-based controls are the even controls of a 1-based labelling.
        for (unsigned q = 1; q + config.cross_stride < num_qubits; q += 2) {
            edges.emplace_back(q, q + config.cross_stride);
        }
    }
    return edges;
}

Circuit build_qts_circuit(std::span<const double> thetas, Variant variant,
                          const EntanglementConfig& config) {
    if (thetas.empty()) {
        throw ArgumentError("QTS circuit needs at least one angle");
    }
    const auto n = static_cast<unsigned>(thetas.size());
    Circuit circuit(n);
    for (unsigned q = 0; q < n; ++q) {
        circuit.append(GateOp::ry(q, thetas[q]));
    }
    for (const auto& [control, target] : entanglement_edges(n, variant, config)) {
        circuit.append(GateOp::cx(control, target));
    }
    return circuit;
}

void apply_circuit(const Circuit& circuit, StateVector& state) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw SizeError("circuit and state have different qubit counts");
    }
    for (const auto& op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::RY: state.apply_ry(op.q0, op.angle); break;
            case GateKind::RZ: state.apply_rz(op.q0, op.angle); break;
            case GateKind::SX: state.apply_sx(op.q0); break;
            case GateKind::X: state.apply_x(op.q0); break;
            case GateKind::CX: state.apply_cx(op.q0, op.q1); break;
        }
    }
}

StateVector run(const Circuit& circuit) {
    StateVector state(circuit.num_qubits());
    apply_circuit(circuit, state);
    return state;
}

GateCounts gate_counts(const Circuit& circuit) {
    GateCounts counts;
    for (const auto& op : circuit.ops()) {
        (op.arity() == 2 ? counts.two_qubit : counts.single_qubit) += 1;
    }
    return counts;
}

void write_text(const Circuit& circuit, std::ostream& out) {
    out << "QUBITS " << circuit.num_qubits() << '\n';
    char buf[40];
    for (const auto& op : circuit.ops()) {
        out << to_string(op.kind) << " q" << op.q0;
        if (op.arity() == 2) {
            out << " q" << op.q1;
        }
        if (op.has_angle()) {
            std::snprintf(buf, sizeof buf, "%.17g", op.angle);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream ss;
    write_text(circuit, ss);
    return ss.str();
}

namespace {

using Kind = ParseError::Kind;

unsigned parse_qubit(std::string_view tok, std::size_t line) {
    unsigned q = 0;
    if (tok.size() < 2 || tok[0] != 'q') {
        throw ParseError(Kind::BadOp, line, "expected qubit token like q0, got '" + std::string(tok) + "'");
    }
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(Kind::BadOp, line, "bad qubit token '" + std::string(tok) + "'");
    }
    return q;
}

double parse_angle(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError(Kind::BadOp, line, "bad angle '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

Circuit parse_circuit_text(std::string_view text) {
    struct Pending {
        GateOp op;
        std::size_t line;
    };
    std::vector<Pending> pending;
    unsigned declared = 0;
    unsigned max_index = 0;
    bool any_op = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        const std::string& head = toks[0];
        auto expect = [&](std::size_t count) {
            if (toks.size() != count) {
                throw ParseError(Kind::BadOp, line, head + " expects " + std::to_string(count - 1) + " operands");
            }
        };
        if (head == "QUBITS") {
            expect(2);
            if (any_op || declared != 0) {
                throw ParseError(Kind::BadOp, line, "QUBITS must be the first statement");
            }
            const double count = parse_angle(toks[1], line);
            if (count < 1 || count != std::floor(count) || count > kMaxQubits) {
                throw ParseError(Kind::BadOp, line,
                                 "QUBITS must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
            }
            declared = static_cast<unsigned>(count);
            continue;
        }
        GateOp op{};
        if (head == "RY" || head == "RZ") {
            expect(3);
            const unsigned q = parse_qubit(toks[1], line);
            const double a = parse_angle(toks[2], line);
            op = head == "RY" ? GateOp::ry(q, a) : GateOp::rz(q, a);
        } else if (head == "SX" || head == "X") {
            expect(2);
            const unsigned q = parse_qubit(toks[1], line);
            op = head == "SX" ? GateOp::sx(q) : GateOp::x(q);
        } else if (head == "CX") {
            expect(3);
            op = GateOp::cx(parse_qubit(toks[1], line), parse_qubit(toks[2], line));
        } else {
            throw ParseError(Kind::BadOp, line, "unknown gate '" + head + "'");
        }
        max_index = std::max({max_index, op.q0, op.arity() == 2 ? op.q1 : 0u});
        any_op = true;
        pending.push_back({op, line});
    }
    if (!any_op && declared == 0) {
        throw ParseError(Kind::EmptyFile, 0, "circuit text is empty");
    }
    const unsigned n = declared != 0 ? declared : max_index + 1;
    Circuit circuit(n);
    for (const auto& p : pending) {
        try {
            circuit.append(p.op);
        } catch (const ValidationError& e) {
            throw ParseError(Kind::BadOp, p.line, e.what());
        }
    }
    return circuit;
}

}  // namespace qts
