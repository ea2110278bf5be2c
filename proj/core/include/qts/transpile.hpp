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
 * Lowering of RY/CX circuits to a native {RZ, SX, X, CX} basis.
 *
 * Every RY(theta) becomes the fixed four-gate sequence (in time order)
 *
 *   SX, RZ(theta + pi), SX, RZ(pi)
 *
 * which equals RY(theta) up to a global phase. RZ gates are never merged, so
 * the single-qubit count after lowering is exactly four per RY. CX gates are
 * kept verbatim; there is no routing.
 */

#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "qts/circuit.hpp"

namespace qts {

class Basis {
public:
    /// Throws ValidationError unless CX, RZ and SX are all present.
    Basis(std::initializer_list<GateKind> kinds);
    explicit Basis(std::set<GateKind> kinds);

    /// {RZ, SX, X, CX}
    static Basis native();

    bool contains(GateKind kind) const { return kinds_.count(kind) != 0; }
    const std::set<GateKind>& kinds() const noexcept { return kinds_; }

private:
    std::set<GateKind> kinds_;
};

std::vector<GateOp> decompose_ry(double theta, unsigned qubit = 0);

/// Product of the single-qubit gate matrices of `ops`, applied in list order.
Matrix2 sequence_matrix(const std::vector<GateOp>& ops);

/// Elementwise max distance between `a` and `b` after removing the global phase
/// that best aligns them.
double phase_aligned_distance(const Matrix2& a, const Matrix2& b);

/// Throws ValidationError if `circuit` has gates other than RY/CX.
Circuit transpile(const Circuit& circuit, const Basis& basis = Basis::native());

/// Max over `trials` random product input states of 1 - |<psi_a|psi_b>|.
double verify_equivalence(const Circuit& a, const Circuit& b, unsigned trials,
                          std::uint64_t seed);

inline constexpr double kEquivalenceTolerance = 1e-10;

}  // namespace qts
