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

#ifndef QACLAB_SEARCH_HPP
#define QACLAB_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qaclab/circuit.hpp"

namespace qaclab {

/// C-SIGN supports of each multi layer of a circuit on m qubits with n inputs.
struct Topology {
    int n = 0;
    int m = 0;
    std::vector<MultiLayer> layers;

    /// "{1,2,3}/{1,2,3}": layers separated by '/', gates by ' '.
    std::string str() const;
    /// Throws ValidationError on out-of-range or overlapping supports.
    void validate() const;
};

/// A circuit with the given topology whose single-qubit gates are
/// e^{i beta} Rz(phi) Ry(theta) Rz(lambda). Gate (k, q), for single layer
/// k = 0..L and qubit q, reads params[4*(k*m + q-1) .. +3] as
/// (beta, theta, phi, lambda).
struct ParamCircuit {
    Topology topology;
    std::vector<double> params;

    static size_t param_count(const Topology &t);
    /// All-zero parameters, i.e. identity single-qubit gates.
    static ParamCircuit identity(Topology t);

    QacCircuit materialize() const;
};

/// Sum over classical inputs x of ||C(|x>|0>) - |parity(x), x_2..x_n>|0>||^2,
/// or of 1 - |<target|output>|^2 with phase_free.
double clean_sim_loss(const ParamCircuit &pc, bool phase_free = false);

struct SearchOptions {
    int restarts = 20;
    uint64_t seed = 0;
    /// Maximum optimizer iterations per restart.
    int budget_iters = 400;
    bool phase_free = false;
    /// 0 picks THREADS from the environment, else the hardware concurrency.
    int threads = 0;
};

struct SearchReport {
    Topology topology;
    uint64_t seed = 0;
    bool phase_free = false;
    double best_loss = 0;
    int best_restart = 0;
    std::vector<double> best_params;
    std::vector<double> restart_losses;
    std::vector<int> restart_iterations;
    double wall_seconds = 0;
};

/// Multi-restart Levenberg-Marquardt on the clean-simulation residual.
/// Restart i starts from parameters uniform in [0, 2pi) drawn with seed + i.
SearchReport optimize_depth2(const Topology &t, const SearchOptions &opts);

/// Two-layer topologies on m qubits (n inputs) up to permutations of the
/// non-target inputs and of the ancillas, where every layer is nonempty,
/// every input reaches qubit 1 through the two layers and every ancilla
/// is used. Sorted by their string form.
std::vector<Topology> canonical_topologies(int n, int m);

/// Canonical topologies for every m in n..m_max. Throws PreconditionError
/// when there are more than `limit` unless forced.
std::vector<Topology> sweep_candidates(int n, int m_max, bool force = false, size_t limit = 10000);

/// optimize_depth2 on every candidate; reports sorted by best loss.
std::vector<SearchReport> sweep_topologies(int n, int m_max, const SearchOptions &opts, bool force = false);

/// Worker count for parallel loops: THREADS if set and positive, else the
/// hardware concurrency.
int default_thread_count();

}  // namespace qaclab

#endif
