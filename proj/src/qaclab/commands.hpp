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

#ifndef QACLAB_COMMANDS_HPP
#define QACLAB_COMMANDS_HPP

#include <optional>
#include <vector>

#include "qaclab/report.hpp"

namespace qaclab {

struct CommandOptions {
    double tol = kDefaultTolerance;
    uint64_t seed = 0;
    bool phase_free = false;
    int restarts = 20;
    int budget_iters = 400;
    bool timing = false;
    int threads = 0;
    bool force = false;
};

namespace commands {

Report simulate(const QacCircuit &c, const QuantumState &input, const CommandOptions &o);
Report check_clean(const QacCircuit &c, const CleanTarget &target, const CommandOptions &o);
/// Without an ancilla state the ancillas start in |0...0>.
Report check_weak(const QacCircuit &c, const std::optional<QuantumState> &ancilla, const CommandOptions &o);
Report separability(const QuantumState &psi, QubitSet s, const CommandOptions &o);
Report simplify(const QuantumState &psi, QubitSet s, Complex eta, const CommandOptions &o);
Report lemma_entanglement(const QuantumState &psi, QubitSet s, Complex eta, const CommandOptions &o);
/// phi defaults to G_eta(S) psi.
Report test_string_witness(const QuantumState &psi, const std::optional<QuantumState> &phi, QubitSet s,
                           QubitSet part_a, QubitSet part_c, Complex eta, WitnessMode mode, const CommandOptions &o);
Report kill_parity(int n, const std::vector<ComplexMatrix> &unitaries, int parity_bit, const CommandOptions &o);
/// k Haar-random n-qubit unitaries drawn from the seed.
Report kill_parity_random(int n, int k, int parity_bit, const CommandOptions &o);
Report kill_parity_depth2(const QacCircuit &c, int q1, int q2, int q3, int parity_bit, const CommandOptions &o);
Report refute_depth1(const QacCircuit &c, const CommandOptions &o);
Report appendix_b_check(const EquationValues &v, const CommandOptions &o);
Report appendix_b_generate(EquationCase kind, const CommandOptions &o);
Report search_depth2(const Topology &t, const CommandOptions &o);
Report sweep(int n, int m_max, const CommandOptions &o);

}  // namespace commands

}  // namespace qaclab

#endif
