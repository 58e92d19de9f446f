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

#ifndef QACLAB_CIRCUIT_HPP
#define QACLAB_CIRCUIT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qaclab/gates.hpp"

namespace qaclab {

/// A single-qubit gate. When the gate was given in (beta, theta, phi, lambda)
/// form the parameters are kept so serialization reproduces them.
struct SingleQubitGate {
    Matrix2c matrix = Matrix2c::Identity();
    std::optional<std::array<double, 4>> zyz;

    static SingleQubitGate from_matrix(const Matrix2c &m);
    static SingleQubitGate from_zyz(const std::array<double, 4> &params);
    SingleQubitGate adjoint() const;
};

/// One layer of single-qubit gates; qubits without an entry see the identity.
struct SingleLayer {
    std::map<int, SingleQubitGate> gates;
    Matrix2c gate_on(int q) const;
};

/// One layer of C-SIGN gates with pairwise-disjoint supports.
struct MultiLayer {
    std::vector<QubitSet> csign;
    /// The support containing q, if any.
    std::optional<QubitSet> support_of(int q) const;
};

using Layer = std::variant<SingleLayer, MultiLayer>;

/// A QAC circuit on `qubits` qubits whose first `inputs` qubits are inputs
/// (qubit 1 is the target). In canonical form the layers alternate
/// single, multi, single, ..., single; layer k+1/2 is single_layer(k) and
/// layer l is multi_layer(l).
class QacCircuit {
   public:
    QacCircuit(int qubits, int inputs, std::vector<Layer> layers);

    /// Builds a canonical circuit; singles.size() must equal multis.size() + 1.
    static QacCircuit from_layers(int qubits, int inputs, std::vector<SingleLayer> singles,
                                  std::vector<MultiLayer> multis);
    /// Inserts identity single layers around and between multi layers. Two
    /// adjacent single layers are left in place for validation to report.
    static QacCircuit canonicalize(int qubits, int inputs, std::vector<Layer> layers);

    int qubits() const {
        return qubits_;
    }
    int inputs() const {
        return inputs_;
    }
    /// Number of multi-qubit layers.
    int depth() const;
    const std::vector<Layer> &layers() const {
        return layers_;
    }
    /// Layer k+1/2, 0 <= k <= depth. Requires canonical form.
    const SingleLayer &single_layer(int k) const;
    SingleLayer &single_layer(int k);
    /// Layer l, 1 <= l <= depth. Requires canonical form.
    const MultiLayer &multi_layer(int l) const;

   private:
    int qubits_;
    int inputs_;
    std::vector<Layer> layers_;
};

/// Every violation found, each with its layer location; empty when valid.
std::vector<std::string> validate_circuit(const QacCircuit &c);
/// Throws ValidationError listing all violations.
void require_valid(const QacCircuit &c);

/// Applies the layers left to right. The input must have c.qubits() qubits.
QuantumState apply_circuit(const QacCircuit &c, const QuantumState &input);

/// States between layers: states[i] is the state just before layers()[i]
/// and states.back() the output.
std::vector<QuantumState> apply_circuit_trace(const QacCircuit &c, const QuantumState &input);

/// Reversed layers with adjoint single-qubit gates.
QacCircuit invert_circuit(const QacCircuit &c);

enum class TargetKind { Parity, Fanout, Toffoli, Unitary };

std::string target_kind_name(TargetKind kind);

/// Gate to be cleanly simulated on the n input qubits. Named targets use the
/// ordered list 1..n (qubit 1 is the parity/Toffoli target, fanout control).
struct CleanTarget {
    TargetKind kind = TargetKind::Parity;
    ComplexMatrix unitary;  // only for TargetKind::Unitary

    /// G|x> for a classical input of n qubits.
    ComplexVector image(uint64_t x, int n) const;
};

struct CleanSimulationReport {
    std::vector<double> distances;  // indexed by classical input x
    double max_distance = 0;
    uint64_t worst_input = 0;
    bool passed = false;
    /// Set when the global phase was forgiven; this is not the exact-equality notion.
    bool phase_free = false;
};

/// Compares C(|x> (x) |0^{m-n}>) with (G|x>) (x) |0^{m-n}> for every x by
/// vector distance. With phase_free the per-input distance is
/// sqrt(1 - |<expected|output>|^2) instead.
CleanSimulationReport check_clean_simulation(const QacCircuit &c, const CleanTarget &target,
                                             double tol = kDefaultTolerance, bool phase_free = false);

struct WeakParityReport {
    std::vector<double> leakage;  // norm of the wrong-target component per input
    double max_leakage = 0;
    uint64_t worst_input = 0;
    bool passed = false;
};

/// Checks C(|x> (x) |ancilla>) has target (qubit 1) equal to parity(x) for
/// every x, up to leakage below tol. Without an ancilla state the ancillas
/// start in |0...0>.
WeakParityReport check_weak_parity(const QacCircuit &c, const std::optional<QuantumState> &ancilla,
                                   double tol = kDefaultTolerance);

struct MixingClass {
    bool mixing = true;
    /// Non-mixing form: e^{i beta} e^{i alpha Z}, or e^{i beta} X e^{i alpha Z} when with_x.
    bool with_x = false;
    double alpha = 0;
    double beta = 0;
    double reconstruction_error = 0;
};

/// Mixing iff every entry has modulus at least tol.
MixingClass classify_mixing(const Matrix2c &gate, double tol = kDefaultTolerance);

struct QubitRole {
    int qubit = 0;
    bool pass_in = false;
    bool pass_through = false;
    /// Support of the gate acting on this qubit in multi layer l (index l-1).
    std::vector<std::optional<QubitSet>> gates;
};

struct QubitRoleReport {
    std::vector<QubitRole> roles;  // index q-1
};

QubitRoleReport classify_qubit_roles(const QacCircuit &c, double tol = kDefaultTolerance);

}  // namespace qaclab

#endif
