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

#include "qts/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qts/errors.hpp"
#include "qts/random.hpp"

namespace qts {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_num_qubits(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        std::ostringstream ss;
        ss << "qubit count " << n << " outside [1, " << kMaxQubits << "]";
        throw SizeError(ss.str());
    }
}

void check_flips(std::span<const double> flips, unsigned n) {
    if (flips.size() != n) {
        throw ArgumentError("readout flip vector length " + std::to_string(flips.size()) +
                            " does not match " + std::to_string(n) + " qubits");
    }
    for (double f : flips) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw DomainError("readout flip probability must lie in [0, 1]");
        }
    }
}

}  // namespace

Matrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
}

Matrix2 rz_matrix(double theta) {
    return {std::exp(-kI * (theta / 2)), Complex{}, Complex{}, std::exp(kI * (theta / 2))};
}

Matrix2 sx_matrix() {
    const Complex a{0.5, 0.5};
    const Complex b{0.5, -0.5};
    return {a, b, b, a};
}

Matrix2 x_matrix() { return {Complex{}, Complex{1.0}, Complex{1.0}, Complex{}}; }
Matrix2 y_matrix() { return {Complex{}, -kI, kI, Complex{}}; }
Matrix2 z_matrix() { return {Complex{1.0}, Complex{}, Complex{}, Complex{-1.0}}; }
Matrix2 identity_matrix() { return {Complex{1.0}, Complex{}, Complex{}, Complex{1.0}}; }

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool is_unitary(const Matrix2& u, double tol) {
    // u^dagger u == I
    const Complex d00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
    const Complex d01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const Complex d11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
    return std::abs(d00 - 1.0) <= tol && std::abs(d11 - 1.0) <= tol && std::abs(d01) <= tol;
}

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_num_qubits(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw SizeError("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_num_qubits(n);
    double norm = 0.0;
    for (const auto& a : amps) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ValidationError("amplitudes are not normalized");
    }
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

void StateVector::check_qubit(unsigned qubit) const {
    if (qubit >= num_qubits_) {
        throw ArgumentError("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::apply_matrix(unsigned qubit, const Matrix2& u) {
    const std::size_t stride = qubit_mask(num_qubits_, qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void StateVector::apply_ry(unsigned qubit, double theta) {
    check_qubit(qubit);
    if (!std::isfinite(theta)) {
        throw DomainError("rotation angle must be finite");
    }
    // Real 2x2 rotation; avoids complex multiplies on the hot path.
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const std::size_t stride = qubit_mask(num_qubits_, qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = c * a0 - s * a1;
            amps_[i + stride] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_rz(unsigned qubit, double theta) {
    check_qubit(qubit);
    if (!std::isfinite(theta)) {
        throw DomainError("rotation angle must be finite");
    }
    apply_matrix(qubit, rz_matrix(theta));
}

void StateVector::apply_sx(unsigned qubit) {
    check_qubit(qubit);
    apply_matrix(qubit, sx_matrix());
}

void StateVector::apply_x(unsigned qubit) {
    check_qubit(qubit);
    const std::size_t stride = qubit_mask(num_qubits_, qubit);
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        std::swap_ranges(amps_.begin() + static_cast<std::ptrdiff_t>(base),
                         amps_.begin() + static_cast<std::ptrdiff_t>(base + stride),
                         amps_.begin() + static_cast<std::ptrdiff_t>(base + stride));
    }
}

void StateVector::apply_cx(unsigned control, unsigned target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("CX control and target must differ");
    }
    const std::uint64_t cmask = qubit_mask(num_qubits_, control);
    const std::uint64_t tmask = qubit_mask(num_qubits_, target);
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        // Visit each swapped pair once, from its target-bit-0 member.
        if ((k & cmask) && !(k & tmask)) {
            std::swap(amps_[k], amps_[k | tmask]);
        }
    }
}

void StateVector::apply_1q_unitary(unsigned qubit, const Matrix2& u) {
    check_qubit(qubit);
    if (!is_unitary(u)) {
        throw ValidationError("matrix is not unitary within 1e-10");
    }
    apply_matrix(qubit, u);
}

ProbDist::ProbDist(unsigned num_qubits, std::vector<double> probs)
    : num_qubits_(num_qubits), probs_(std::move(probs)) {
    check_num_qubits(num_qubits);
    if (probs_.size() != (std::size_t{1} << num_qubits)) {
        throw SizeError("distribution length does not match 2^n");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw ValidationError("probabilities must be non-negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ValidationError("probabilities do not sum to 1");
    }
}

double ProbDist::marginal_one(unsigned qubit) const {
    if (qubit >= num_qubits_) {
        throw ArgumentError("qubit index out of range");
    }
    const std::uint64_t mask = qubit_mask(num_qubits_, qubit);
    double p = 0.0;
    for (std::uint64_t k = 0; k < probs_.size(); ++k) {
        if (k & mask) {
            p += probs_[k];
        }
    }
    return p;
}

ProbDist Counts::to_distribution() const {
    if (shots == 0) {
        throw ArgumentError("empty counts");
    }
    std::vector<double> probs(std::size_t{1} << num_qubits, 0.0);
    for (const auto& [k, c] : histogram) {
        probs.at(k) = static_cast<double>(c) / static_cast<double>(shots);
    }
    return ProbDist(num_qubits, std::move(probs));
}

ProbDist probabilities(const StateVector& state) {
    std::vector<double> probs(state.dimension());
    const auto amps = state.amplitudes();
    std::transform(amps.begin(), amps.end(), probs.begin(),
                   [](const Complex& a) { return std::norm(a); });
    return ProbDist(state.num_qubits(), std::move(probs));
}

Counts sample(const ProbDist& dist, std::uint64_t shots, std::uint64_t seed,
              std::span<const double> readout_flips) {
    if (shots == 0) {
        throw ArgumentError("shots must be >= 1");
    }
    const unsigned n = dist.num_qubits();
    if (!readout_flips.empty()) {
        check_flips(readout_flips, n);
    }
    std::vector<double> cdf(dist.size());
    std::partial_sum(dist.probs().begin(), dist.probs().end(), cdf.begin());

    Rng rng(seed);
    Counts counts{n, shots, {}};
    for (std::uint64_t s = 0; s < shots; ++s) {
        // u < cdf.back(), so upper_bound lands on an outcome with non-zero probability.
        const double u = rng.uniform() * cdf.back();
        std::uint64_t k = static_cast<std::uint64_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        for (unsigned q = 0; q < readout_flips.size(); ++q) {
            if (rng.uniform() < readout_flips[q]) {
                k ^= qubit_mask(n, q);
            }
        }
        ++counts.histogram[k];
    }
    return counts;
}

ProbDist apply_readout_flips(const ProbDist& dist, std::span<const double> readout_flips) {
    const unsigned n = dist.num_qubits();
    check_flips(readout_flips, n);
    std::vector<double> probs(dist.probs().begin(), dist.probs().end());
    for (unsigned q = 0; q < n; ++q) {
        const double f = readout_flips[q];
        const std::size_t stride = qubit_mask(n, q);
        for (std::size_t base = 0; base < probs.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const double p0 = probs[i];
                const double p1 = probs[i + stride];
                probs[i] = (1.0 - f) * p0 + f * p1;
                probs[i + stride] = f * p0 + (1.0 - f) * p1;
            }
        }
    }
    return ProbDist(n, std::move(probs));
}

double expectation_bitvalue(const ProbDist& dist) {
    double e = 0.0;
    const auto probs = dist.probs();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        e += probs[k] * static_cast<double>(k);
    }
    return e;
}

double total_variation(const ProbDist& a, const ProbDist& b) {
    if (a.size() != b.size()) {
        throw SizeError("distributions over different registers");
    }
    double l1 = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        l1 += std::abs(a[k] - b[k]);
    }
    return 0.5 * l1;
}

ProbDist product_of_marginals(const ProbDist& dist) {
    const unsigned n = dist.num_qubits();
    std::vector<double> ones(n);
    for (unsigned q = 0; q < n; ++q) {
        ones[q] = dist.marginal_one(q);
    }
    std::vector<double> probs(dist.size(), 1.0);
    for (std::uint64_t k = 0; k < probs.size(); ++k) {
        for (unsigned q = 0; q < n; ++q) {
            probs[k] *= (k & qubit_mask(n, q)) ? ones[q] : 1.0 - ones[q];
        }
    }
    return ProbDist(n, std::move(probs));
}

}  // namespace qts
