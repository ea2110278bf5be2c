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
 * Dense statevector simulation of small qubit registers.
 *
 * Bit convention: qubit 0 is the most significant bit of the basis index k.
 * For an n-qubit register, qubit q toggles the bit with value 2^(n-1-q).
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qts {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr unsigned kMaxQubits = 24;

Matrix2 ry_matrix(double theta);
Matrix2 rz_matrix(double theta);
Matrix2 sx_matrix();
Matrix2 x_matrix();
Matrix2 y_matrix();
Matrix2 z_matrix();
Matrix2 identity_matrix();

/// Matrix product a * b.
Matrix2 multiply(const Matrix2& a, const Matrix2& b);
bool is_unitary(const Matrix2& u, double tol = 1e-10);

/// Bit mask of `qubit` in an n-qubit basis index.
constexpr std::uint64_t qubit_mask(unsigned num_qubits, unsigned qubit) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

class StateVector {
public:
    /// |0...0> on `num_qubits` qubits. Throws SizeError outside [1, kMaxQubits].
    explicit StateVector(unsigned num_qubits);

    /// Takes ownership of explicit amplitudes. The length must be a power of two
    /// and the vector normalized within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::size_t k) const { return amps_.at(k); }
    double norm_squared() const noexcept;

    void apply_ry(unsigned qubit, double theta);
    void apply_rz(unsigned qubit, double theta);
    void apply_sx(unsigned qubit);
    void apply_x(unsigned qubit);
    void apply_cx(unsigned control, unsigned target);

    /// Applies `u` to `qubit`. Throws ValidationError if `u` is not unitary within 1e-10.
    void apply_1q_unitary(unsigned qubit, const Matrix2& u);

private:
    StateVector(unsigned num_qubits, std::vector<Complex> amps);

    void check_qubit(unsigned qubit) const;
    void apply_matrix(unsigned qubit, const Matrix2& u);

    unsigned num_qubits_;
    std::vector<Complex> amps_;
};

inline StateVector new_zero_state(unsigned num_qubits) { return StateVector(num_qubits); }

/// Outcome distribution over the 2^n basis indices.
class ProbDist {
public:
    /// Validates non-negativity and unit sum (within 1e-9).
    ProbDist(unsigned num_qubits, std::vector<double> probs);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t k) const { return probs_.at(k); }

    /// Probability that `qubit` reads 1.
    double marginal_one(unsigned qubit) const;

private:
    unsigned num_qubits_;
    std::vector<double> probs_;
};

/// Shot histogram; keys are basis indices, values occurrence counts.
struct Counts {
    unsigned num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;

    /// Empirical distribution histogram / shots.
    ProbDist to_distribution() const;
};

ProbDist probabilities(const StateVector& state);

/// Draws `shots` i.i.d. outcomes; each sampled bit of qubit q then flips with
/// probability readout_flips[q] when the span is non-empty.
Counts sample(const ProbDist& dist, std::uint64_t shots, std::uint64_t seed,
              std::span<const double> readout_flips = {});

/// Exact outcome distribution after independent per-qubit readout flips.
ProbDist apply_readout_flips(const ProbDist& dist, std::span<const double> readout_flips);

/// Sum over k of P(k) * k.
double expectation_bitvalue(const ProbDist& dist);

/// Total-variation distance, half the L1 difference.
double total_variation(const ProbDist& a, const ProbDist& b);

/// Product of the per-qubit marginals of `dist`.
ProbDist product_of_marginals(const ProbDist& dist);

}  // namespace qts
