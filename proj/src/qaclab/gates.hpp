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

#ifndef QACLAB_GATES_HPP
#define QACLAB_GATES_HPP

#include <string>
#include <vector>

#include "qaclab/state.hpp"

namespace qaclab {

namespace gates {
Matrix2c identity();
Matrix2c hadamard();
Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();
/// e^{i global_phase} Rz(phi) Ry(theta) Rz(lambda), with
/// Rz(a) = diag(e^{-ia/2}, e^{ia/2}) and Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
/// Every 2x2 unitary has this form.
Matrix2c zyz(double global_phase, double theta, double phi, double lambda);
/// Haar-random 2x2 unitary.
Matrix2c random(std::mt19937_64 &rng);
}  // namespace gates

enum class GateKind { CSign, GEta, Parity, Fanout, Toffoli };

std::string gate_kind_name(GateKind kind);

/// A multi-qubit gate of the C-SIGN family or one of the classical gates.
///
/// CSign and GEta act on a qubit set and are symmetric in it; CSign(empty) is
/// -I and GEta(empty) is eta*I. Parity, Fanout and Toffoli act on an ordered
/// list: Parity and Toffoli list the target first, Fanout the control first.
struct StructuredGate {
    GateKind kind = GateKind::CSign;
    std::vector<int> qubits;
    Complex eta{-1.0, 0.0};

    static StructuredGate csign(QubitSet support);
    static StructuredGate geta(QubitSet support, Complex eta);
    static StructuredGate parity(std::vector<int> target_first);
    static StructuredGate fanout(std::vector<int> control_first);
    static StructuredGate toffoli(std::vector<int> target_first);

    QubitSet support() const;
    std::string str() const;
};

/// Throws InvalidArgument unless |eta| = 1 and eta != 1 (to 1e-12).
void check_eta(Complex eta);

/// Applies the gate exactly per its defining formula.
QuantumState apply_structured_gate(const QuantumState &state, const StructuredGate &gate);

/// The classical permutation of an ordered-list gate applied to basis index x.
uint64_t classical_gate_image(const StructuredGate &gate, uint64_t x, int n);

}  // namespace qaclab

#endif
