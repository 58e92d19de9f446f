// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaclab/state.hpp"

#include <cmath>

#include "qaclab/errors.hpp"

namespace qaclab {

static void check_register_size(int n) {
    if (n < 1 || n > kMaxStateQubits) {
        throw InvalidArgument("register size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxStateQubits));
    }
}

QuantumState::QuantumState(int n, ComplexVector amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_register_size(n);
    if (static_cast<uint64_t>(amps_.size()) != dim()) {
        throw InvalidArgument("state of " + std::to_string(n) + " qubits needs " + std::to_string(dim()) +
                              " amplitudes, got " + std::to_string(amps_.size()));
    }
    double nrm = amps_.norm();
    if (!(std::abs(nrm - 1.0) < 1e-9)) {
        throw InvalidArgument("state norm " + std::to_string(nrm) + " differs from 1 by more than 1e-9");
    }
}

QuantumState make_state_unchecked(int n, ComplexVector amplitudes) {
    return QuantumState(QuantumState::Unchecked{}, n, std::move(amplitudes));
}

QuantumState QuantumState::normalized(int n, ComplexVector amplitudes) {
    double nrm = amplitudes.norm();
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw InvalidArgument("cannot normalize a zero or non-finite vector");
    }
    return QuantumState(n, amplitudes / nrm);
}

QuantumState QuantumState::basis(int n, uint64_t index) {
    check_register_size(n);
    if (index >= (uint64_t{1} << n)) {
        throw InvalidArgument("basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(uint64_t{1} << n));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return QuantumState(n, std::move(v));
}

QuantumState QuantumState::basis(const std::string &bits) {
    BitString s = BitString::parse(bits);
    int n = static_cast<int>(bits.size());
    return basis(n, s.to_index(n));
}

QuantumState QuantumState::random(int n, std::mt19937_64 &rng) {
    check_register_size(n);
    return QuantumState(n, random_unit_vector(1 << n, rng));
}

QuantumState QuantumState::tensor(const QuantumState &first, const QuantumState &second) {
    int n = first.qubits() + second.qubits();
    check_register_size(n);
    ComplexVector v(static_cast<Eigen::Index>(uint64_t{1} << n));
    const auto d2 = static_cast<Eigen::Index>(second.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(first.dim()); i++) {
        v.segment(i * d2, d2) = first.amps_[i] * second.amps_;
    }
    return QuantumState(n, std::move(v));
}

double QuantumState::mass_all_ones(QubitSet ones) const {
    if (!ones.is_subset_of(QubitSet::range(1, n_))) {
        throw InvalidArgument("qubit set " + ones.str() + " outside the register");
    }
    const uint64_t mask = index_mask(ones, n_);
    double mass = 0;
    for (uint64_t i = 0; i < dim(); i++) {
        if ((i & mask) == mask) {
            mass += std::norm(amps_[static_cast<Eigen::Index>(i)]);
        }
    }
    return mass;
}

double QuantumState::mass_with_zero(int q) const {
    if (q < 1 || q > n_) {
        throw InvalidArgument("qubit " + std::to_string(q) + " outside the register");
    }
    const uint64_t bit = uint64_t{1} << index_bit(q, n_);
    double mass = 0;
    for (uint64_t i = 0; i < dim(); i++) {
        if (!(i & bit)) {
            mass += std::norm(amps_[static_cast<Eigen::Index>(i)]);
        }
    }
    return mass;
}

Eigen::Matrix2cd QuantumState::reduced_density_matrix(int q) const {
    if (q < 1 || q > n_) {
        throw InvalidArgument("qubit " + std::to_string(q) + " outside the register");
    }
    const uint64_t bit = uint64_t{1} << index_bit(q, n_);
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (uint64_t i = 0; i < dim(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a0 = amps_[static_cast<Eigen::Index>(i)];
        Complex a1 = amps_[static_cast<Eigen::Index>(i | bit)];
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

namespace kernels {

void apply_1q(Complex *amps, int n, const Matrix2c &gate, int qubit) {
    const uint64_t stride = uint64_t{1} << index_bit(qubit, n);
    const uint64_t dim = uint64_t{1} << n;
    const Complex g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    for (uint64_t base = 0; base < dim; base += 2 * stride) {
        for (uint64_t i = base; i < base + stride; i++) {
            Complex a0 = amps[i];
            Complex a1 = amps[i + stride];
            amps[i] = g00 * a0 + g01 * a1;
            amps[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

void apply_phase_on_ones(Complex *amps, int n, uint64_t index_ones, Complex phase) {
    const uint64_t dim = uint64_t{1} << n;
    for (uint64_t i = 0; i < dim; i++) {
        if ((i & index_ones) == index_ones) {
            amps[i] *= phase;
        }
    }
}

}  // namespace kernels

QuantumState apply_single_qubit(const QuantumState &state, const Matrix2c &gate, int qubit) {
    if (qubit < 1 || qubit > state.qubits()) {
        throw InvalidArgument("qubit " + std::to_string(qubit) + " outside a register of " +
                              std::to_string(state.qubits()) + " qubits");
    }
    if (!is_unitary(gate, kUnitarityTolerance)) {
        throw ValidationError({"single-qubit gate on qubit " + std::to_string(qubit) + " is not unitary"});
    }
    ComplexVector v = state.amplitudes();
    kernels::apply_1q(v.data(), state.qubits(), gate, qubit);
    return make_state_unchecked(state.qubits(), std::move(v));
}

Subspace parity_subspace_basis(int n, int b) {
    if (n < 1 || n > kMaxStateQubits) {
        throw InvalidArgument("parity subspace needs 1.." + std::to_string(kMaxStateQubits) + " qubits");
    }
    if (b != 0 && b != 1) {
        throw InvalidArgument("parity bit must be 0 or 1");
    }
    const uint64_t dim = uint64_t{1} << n;
    ComplexMatrix basis = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim / 2));
    Eigen::Index col = 0;
    for (uint64_t x = 0; x < dim; x++) {
        if (std::popcount(x) % 2 == b) {
            basis(static_cast<Eigen::Index>(x), col++) = 1.0;
        }
    }
    return Subspace(static_cast<int>(dim), std::move(basis));
}

ParityClass classify_state_parity(const QuantumState &state, double tol) {
    double mass[2] = {0, 0};
    for (uint64_t x = 0; x < state.dim(); x++) {
        mass[std::popcount(x) % 2] += std::norm(state.amplitude(x));
    }
    ParityClass out;
    int closest = mass[0] >= mass[1] ? 0 : 1;
    double outside = mass[1 - closest];
    out.leakage = std::sqrt(outside);
    if (outside < tol * tol) {
        out.pure_bit = closest;
    }
    return out;
}

}  // namespace qaclab
