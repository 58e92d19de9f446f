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

#ifndef QACLAB_CONSTRUCTIONS_HPP
#define QACLAB_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "qaclab/circuit.hpp"
#include "qaclab/entanglement.hpp"

namespace qaclab {

/// A pure-parity state whose all-ones amplitude vanishes after each prefix
/// V_i = U_i ... U_1 of the given unitaries.
struct KillerStateCertificate {
    QuantumState state;
    int parity_bit = 0;
    /// |<1^n|V_i|psi>| for i = 1..k.
    std::vector<double> residuals;
    /// Norm of the component of the state outside P_b.
    double parity_leakage = 0;
    /// Dimension of the null space the state was taken from.
    int null_space_dimension = 0;
    bool valid = false;
};

/// Requires k < 2^(n-1) unitaries of size 2^n. With k = 0 the first basis
/// vector of P_b is returned.
KillerStateCertificate kill_parity_state(int n, const std::vector<ComplexMatrix> &unitaries, int parity_bit,
                                         double tol = kDefaultTolerance);

/// Places `local` on `labels` (labels[0] carries the most significant local
/// qubit) and the basis string `rest` on the remaining qubits of [n].
QuantumState embed_state(const QuantumState &local, const std::vector<int> &labels, int n, const BitString &rest);

struct Depth2KillerResult {
    KillerStateCertificate certificate;
    std::vector<int> qubits;
    /// Shared supports in multi layers 1 and 2.
    QubitSet gate1, gate2;
    /// max over checked completions of ||G psi - psi|| for each shared gate
    /// at the point it is applied.
    double gate1_residual = 0;
    double gate2_residual = 0;
    int completions_checked = 0;
    bool both_off = false;
};

/// Commits q1, q2, q3 to a 3-qubit killer state that turns off the gates they
/// share in both layers of a depth-2 circuit. The turn-off is checked on the
/// all-zero completion plus `random_completions` seeded basis completions.
Depth2KillerResult kill_parity_depth2(const QacCircuit &c, int q1, int q2, int q3, int parity_bit,
                                      double tol = kDefaultTolerance, int random_completions = 5,
                                      uint64_t seed = 0);

enum class RefutationKind { NotApplicable, Disconnected, KillerState };

std::string refutation_kind_name(RefutationKind kind);

struct Depth1Refutation {
    RefutationKind kind = RefutationKind::NotApplicable;
    std::string reason;
    /// Input qubit that shares no gate with the target (Disconnected).
    int disconnected_qubit = 0;
    /// The target's gate and the committed/toggled qubits (KillerState).
    QubitSet gate;
    int q2 = 0;
    int q3 = 0;
    std::optional<KillerStateCertificate> killer;
    std::optional<QuantumState> output_q3_zero;
    std::optional<QuantumState> output_q3_one;
    Eigen::Matrix2cd target_q3_zero = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd target_q3_one = Eigen::Matrix2cd::Zero();
    /// Trace distance of the target's reduced states on the all-zero completion.
    double trace_distance = 0;
    /// Largest trace distance over the random basis completions.
    double max_completion_trace_distance = 0;
    /// The target output does not depend on q3.
    bool refuted = false;
};

/// Shows a depth-1 circuit cannot compute parity of n >= 3 inputs, either by
/// an input that never meets the target or by a killer state on the target
/// and one partner that makes the output ignore a third input.
Depth1Refutation refute_depth1(const QacCircuit &c, double tol = kDefaultTolerance, uint64_t seed = 0);

/// 0.5 * sum of |eigenvalues| of (rho - sigma).
double trace_distance(const Eigen::Matrix2cd &rho, const Eigen::Matrix2cd &sigma);

/// The 6-qubit topology with first layer {1,2,3},{4,5,6}, middle gate
/// {2,3,4} and last layer {1,2},{3,4,5,6}.
struct ScenarioResult {
    QacCircuit circuit;
    BitString input;
    SimplifyStatus middle_status;
    bool post_gate_entangled = false;
    /// NoSimplify implies the state after the middle gate is {2,3,4}-entangled.
    bool holds = false;
};

ScenarioResult middle_gate_scenario(uint64_t seed, double tol = kDefaultTolerance);

}  // namespace qaclab

#endif
