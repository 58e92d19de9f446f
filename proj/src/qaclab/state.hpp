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

#ifndef QACLAB_STATE_HPP
#define QACLAB_STATE_HPP

#include <optional>
#include <string>

#include "qaclab/bits.hpp"
#include "qaclab/linalg.hpp"

namespace qaclab {

/// Largest register the dense simulator accepts.
inline constexpr int kMaxStateQubits = 24;

/// A normalized pure state of n labeled qubits. Qubit 1 is the most
/// significant bit of the basis index.
class QuantumState {
   public:
    /// Requires 2^n amplitudes with norm within 1e-9 of 1.
    QuantumState(int n, ComplexVector amplitudes);

    /// Rescales a nonzero vector to unit norm.
    static QuantumState normalized(int n, ComplexVector amplitudes);
    static QuantumState basis(int n, uint64_t index);
    /// Basis state from a string such as "0110" (qubit 1 first).
    static QuantumState basis(const std::string &bits);
    /// Haar-random state.
    static QuantumState random(int n, std::mt19937_64 &rng);
    /// first (x) second, where second's qubits are relabeled after first's.
    static QuantumState tensor(const QuantumState &first, const QuantumState &second);

    int qubits() const {
        return n_;
    }
    uint64_t dim() const {
        return uint64_t{1} << n_;
    }
    const ComplexVector &amplitudes() const {
        return amps_;
    }
    Complex amplitude(uint64_t index) const {
        return amps_[static_cast<Eigen::Index>(index)];
    }
    Complex amplitude(const BitString &x) const {
        return amplitude(x.to_index(n_));
    }
    double norm() const {
        return amps_.norm();
    }

    /// Squared amplitude mass on basis strings whose bits on `ones` are all 1.
    double mass_all_ones(QubitSet ones) const;
    /// Squared amplitude mass on basis strings with qubit q equal to 0.
    double mass_with_zero(int q) const;

    /// Reduced density matrix of a single qubit.
    Eigen::Matrix2cd reduced_density_matrix(int q) const;

   private:
    struct Unchecked {};
    QuantumState(Unchecked, int n, ComplexVector amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    }
    friend QuantumState make_state_unchecked(int n, ComplexVector amplitudes);

    int n_;
    ComplexVector amps_;
};

/// Wraps amplitudes produced by a unitary evolution of a valid state.
QuantumState make_state_unchecked(int n, ComplexVector amplitudes);

/// (gate acting on `qubit`) |state>. The gate must be unitary to 1e-10.
QuantumState apply_single_qubit(const QuantumState &state, const Matrix2c &gate, int qubit);

/// Computational basis states |x> of n qubits with parity(x) = b; dimension 2^(n-1).
Subspace parity_subspace_basis(int n, int b);

struct ParityClass {
    /// Set when the state lies in P_b to within tol.
    std::optional<int> pure_bit;
    /// Norm of the component outside the closest parity subspace.
    double leakage;
};

/// Pure(b) iff the squared amplitude outside P_b is below tol^2.
ParityClass classify_state_parity(const QuantumState &state, double tol = kDefaultTolerance);

/// In-place kernels over raw 2^n amplitude buffers.
namespace kernels {
void apply_1q(Complex *amps, int n, const Matrix2c &gate, int qubit);
/// Multiplies every amplitude whose index covers `index_ones` by phase.
void apply_phase_on_ones(Complex *amps, int n, uint64_t index_ones, Complex phase);
}  // namespace kernels

}  // namespace qaclab

#endif
