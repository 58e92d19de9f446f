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

#include "qaclab/constructions.hpp"

#include <bit>
#include <cmath>

#include "qaclab/errors.hpp"

namespace qaclab {

KillerStateCertificate kill_parity_state(int n, const std::vector<ComplexMatrix> &unitaries, int parity_bit,
                                         double tol) {
    if (n < 1 || n > kMaxStateQubits) {
        throw InvalidArgument("killer state needs 1.." + std::to_string(kMaxStateQubits) + " qubits");
    }
    const uint64_t dim = uint64_t{1} << n;
    const size_t half = dim / 2;
    const size_t k = unitaries.size();
    if (k >= half) {
        throw PreconditionError("need k < 2^(n-1) = " + std::to_string(half) + " unitaries, got " +
                                std::to_string(k));
    }
    for (size_t i = 0; i < k; i++) {
        const auto &u = unitaries[i];
        if (static_cast<uint64_t>(u.rows()) != dim || static_cast<uint64_t>(u.cols()) != dim) {
            throw InvalidArgument("unitary " + std::to_string(i + 1) + " is " + std::to_string(u.rows()) + "x" +
                                  std::to_string(u.cols()) + ", expected " + std::to_string(dim) + "x" +
                                  std::to_string(dim));
        }
        if (!is_unitary(u)) {
            throw ValidationError({"operator " + std::to_string(i + 1) + " is not unitary (residual " +
                                   std::to_string(unitarity_residual(u)) + ")"});
        }
    }

    Subspace pb = parity_subspace_basis(n, parity_bit);
    // Row i: <1^n| V_i restricted to the P_b basis.
    ComplexMatrix constraints(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(half));
    std::vector<ComplexVector> rows;
    ComplexMatrix v = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < k; i++) {
        v = unitaries[i] * v;
        ComplexVector last = v.row(static_cast<Eigen::Index>(dim - 1)).transpose();
        constraints.row(static_cast<Eigen::Index>(i)) = (pb.basis().transpose() * last).transpose();
    }

    ComplexVector coeffs;
    int null_dim = static_cast<int>(half);
    if (k == 0) {
        coeffs = ComplexVector::Zero(static_cast<Eigen::Index>(half));
        coeffs[0] = 1.0;
    } else {
        Subspace z = null_space(constraints, tol);
        null_dim = z.dimension();
        if (null_dim == 0) {
            throw InternalError("null space of the " + std::to_string(k) + "x" + std::to_string(half) +
                                " constraint matrix is numerically empty");
        }
        coeffs = z.vector(0);
    }
    ComplexVector amps = pb.basis() * coeffs;
    KillerStateCertificate cert{QuantumState::normalized(n, amps), parity_bit, {}, 0.0, null_dim, false};

    v = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < k; i++) {
        v = unitaries[i] * v;
        ComplexVector out = v * cert.state.amplitudes();
        cert.residuals.push_back(std::abs(out[static_cast<Eigen::Index>(dim - 1)]));
    }
    double wrong = 0;
    for (uint64_t x = 0; x < dim; x++) {
        if (std::popcount(x) % 2 != parity_bit) {
            wrong += std::norm(cert.state.amplitude(x));
        }
    }
    cert.parity_leakage = std::sqrt(wrong);
    cert.valid = cert.parity_leakage < tol && std::abs(cert.state.norm() - 1.0) < 1e-9;
    for (double r : cert.residuals) cert.valid = cert.valid && r < tol;
    return cert;
}

QuantumState embed_state(const QuantumState &local, const std::vector<int> &labels, int n, const BitString &rest) {
    QubitSet placed(labels);
    if (static_cast<int>(labels.size()) != local.qubits() || placed.size() != local.qubits()) {
        throw InvalidArgument("need " + std::to_string(local.qubits()) + " distinct labels for the local state");
    }
    const QubitSet all = QubitSet::range(1, n);
    if (!placed.is_subset_of(all) || rest.domain() != all - placed) {
        throw InvalidArgument("labels " + placed.str() + " and completion domain " + rest.domain().str() +
                              " must partition [" + std::to_string(n) + "]");
    }
    uint64_t base = 0;
    for (int q : rest.domain().labels()) {
        if (rest.value(q)) base |= uint64_t{1} << index_bit(q, n);
    }
    const int nl = local.qubits();
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(uint64_t{1} << n));
    for (uint64_t i = 0; i < local.dim(); i++) {
        uint64_t idx = base;
        for (int t = 0; t < nl; t++) {
            if ((i >> (nl - 1 - t)) & 1) idx |= uint64_t{1} << index_bit(labels[static_cast<size_t>(t)], n);
        }
        amps[static_cast<Eigen::Index>(idx)] = local.amplitude(i);
    }
    return make_state_unchecked(n, std::move(amps));
}

namespace {

ComplexMatrix local_tensor(const SingleLayer &layer, const std::vector<int> &labels) {
    ComplexMatrix u = ComplexMatrix::Identity(1, 1);
    for (int q : labels) u = kron(u, layer.gate_on(q));
    return u;
}

/// ||G psi - psi|| for C-SIGN(S): twice the norm of the all-ones component.
double csign_action(const QuantumState &psi, QubitSet s) {
    return 2.0 * std::sqrt(psi.mass_all_ones(s));
}

BitString random_bits(QubitSet domain, std::mt19937_64 &rng) {
    BitString out(domain, 0);
    std::bernoulli_distribution coin(0.5);
    for (int q : domain.labels()) out.set(q, coin(rng) ? 1 : 0);
    return out;
}

}  // namespace

Depth2KillerResult kill_parity_depth2(const QacCircuit &c, int q1, int q2, int q3, int parity_bit, double tol,
                                      int random_completions, uint64_t seed) {
    require_valid(c);
    if (c.depth() != 2) {
        throw PreconditionError("circuit has depth " + std::to_string(c.depth()) + ", expected 2");
    }
    std::vector<int> qs{q1, q2, q3};
    QubitSet trio(qs);
    if (trio.size() != 3 || !trio.is_subset_of(QubitSet::range(1, c.inputs()))) {
        throw InvalidArgument("q1, q2, q3 must be three distinct input qubits");
    }
    QubitSet shared[2];
    for (int l = 1; l <= 2; l++) {
        auto g = c.multi_layer(l).support_of(q1);
        if (!g || !trio.is_subset_of(*g)) {
            throw PreconditionError("qubits " + trio.str() + " do not share a C-SIGN gate in multi layer " +
                                    std::to_string(l));
        }
        shared[l - 1] = *g;
    }
    std::vector<ComplexMatrix> us{local_tensor(c.single_layer(0), qs), local_tensor(c.single_layer(1), qs)};
    Depth2KillerResult out{kill_parity_state(3, us, parity_bit, tol), qs, shared[0], shared[1]};

    const int m = c.qubits();
    const QubitSet rest = QubitSet::range(1, m) - trio;
    std::mt19937_64 rng(seed);
    out.both_off = true;
    for (int t = 0; t <= random_completions; t++) {
        BitString comp = t == 0 ? BitString(rest, 0) : random_bits(rest, rng);
        QuantumState psi = embed_state(out.certificate.state, qs, m, comp);
        auto trace = apply_circuit_trace(c, psi);
        // trace[1] is the state before multi layer 1, trace[3] before layer 2.
        out.gate1_residual = std::max(out.gate1_residual, csign_action(trace[1], out.gate1));
        out.gate2_residual = std::max(out.gate2_residual, csign_action(trace[3], out.gate2));
        out.completions_checked++;
    }
    out.both_off = out.certificate.valid && out.gate1_residual < tol && out.gate2_residual < tol;
    return out;
}

double trace_distance(const Eigen::Matrix2cd &rho, const Eigen::Matrix2cd &sigma) {
    Eigen::Matrix2cd diff = rho - sigma;
    diff = 0.5 * (diff + diff.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(diff);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

std::string refutation_kind_name(RefutationKind kind) {
    switch (kind) {
        case RefutationKind::NotApplicable:
            return "not_applicable";
        case RefutationKind::Disconnected:
            return "disconnected";
        case RefutationKind::KillerState:
            return "killer_state";
    }
    return "unknown";
}

Depth1Refutation refute_depth1(const QacCircuit &c, double tol, uint64_t seed) {
    require_valid(c);
    if (c.depth() != 1) {
        throw PreconditionError("circuit has depth " + std::to_string(c.depth()) + ", expected 1");
    }
    Depth1Refutation out;
    const int n = c.inputs();
    const int m = c.qubits();
    if (n < 3) {
        out.reason = "parity of fewer than 3 inputs is computable at depth 1";
        return out;
    }
    auto gate = c.multi_layer(1).support_of(1);
    for (int q = 2; q <= n; q++) {
        if (!gate || !gate->contains(q)) {
            out.kind = RefutationKind::Disconnected;
            out.disconnected_qubit = q;
            out.refuted = true;
            out.reason = "input " + std::to_string(q) + " shares no gate with the target";
            return out;
        }
    }
    out.kind = RefutationKind::KillerState;
    out.gate = *gate;
    out.q2 = 2;
    out.q3 = 3;
    std::vector<int> pair{1, 2};
    out.killer = kill_parity_state(2, {local_tensor(c.single_layer(0), pair)}, 0, tol);

    const QubitSet rest = QubitSet::range(1, m) - QubitSet{1, 2};
    auto run = [&](BitString comp, int bit) {
        comp.set(3, bit);
        return apply_circuit(c, embed_state(out.killer->state, pair, m, comp));
    };
    out.output_q3_zero = run(BitString(rest, 0), 0);
    out.output_q3_one = run(BitString(rest, 0), 1);
    out.target_q3_zero = out.output_q3_zero->reduced_density_matrix(1);
    out.target_q3_one = out.output_q3_one->reduced_density_matrix(1);
    out.trace_distance = trace_distance(out.target_q3_zero, out.target_q3_one);

    std::mt19937_64 rng(seed);
    for (int t = 0; t < 5; t++) {
        BitString comp = random_bits(rest, rng);
        double td = trace_distance(run(comp, 0).reduced_density_matrix(1), run(comp, 1).reduced_density_matrix(1));
        out.max_completion_trace_distance = std::max(out.max_completion_trace_distance, td);
    }
    out.refuted = out.killer->valid && out.trace_distance < tol && out.max_completion_trace_distance < tol;
    out.reason = out.refuted ? "target output does not depend on input 3" : "killer state did not isolate input 3";
    return out;
}

ScenarioResult middle_gate_scenario(uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::vector<SingleLayer> singles(4);
    for (auto &layer : singles) {
        for (int q = 1; q <= 6; q++) layer.gates[q] = SingleQubitGate::from_matrix(gates::random(rng));
    }
    std::vector<MultiLayer> multis{MultiLayer{{QubitSet{1, 2, 3}, QubitSet{4, 5, 6}}},
                                   MultiLayer{{QubitSet{2, 3, 4}}},
                                   MultiLayer{{QubitSet{1, 2}, QubitSet{3, 4, 5, 6}}}};
    QacCircuit circuit = QacCircuit::from_layers(6, 6, std::move(singles), std::move(multis));
    BitString input = random_bits(QubitSet::range(1, 6), rng);
    auto trace = apply_circuit_trace(circuit, QuantumState::basis(6, input.to_index(6)));
    const QubitSet s{2, 3, 4};
    ScenarioResult out{circuit, input, simplify_status(trace[3], s, Complex(-1.0, 0.0), tol), false, false};
    out.post_gate_entangled = !s_separability(trace[4], s, tol).separable;
    out.holds = out.middle_status.kind != SimplifyKind::NoSimplify || out.post_gate_entangled;
    return out;
}

}  // namespace qaclab
