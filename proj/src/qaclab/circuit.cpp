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

#include "qaclab/circuit.hpp"

#include <cmath>

#include "qaclab/errors.hpp"

namespace qaclab {

SingleQubitGate SingleQubitGate::from_matrix(const Matrix2c &m) {
    return SingleQubitGate{m, std::nullopt};
}

SingleQubitGate SingleQubitGate::from_zyz(const std::array<double, 4> &p) {
    return SingleQubitGate{gates::zyz(p[0], p[1], p[2], p[3]), p};
}

SingleQubitGate SingleQubitGate::adjoint() const {
    if (zyz) {
        const auto &p = *zyz;
        // (e^{ib} Rz(f) Ry(t) Rz(l))^dagger = e^{-ib} Rz(-l) Ry(-t) Rz(-f)
        return from_zyz({-p[0], -p[1], -p[3], -p[2]});
    }
    return from_matrix(matrix.adjoint());
}

Matrix2c SingleLayer::gate_on(int q) const {
    auto it = gates.find(q);
    return it == gates.end() ? Matrix2c::Identity() : it->second.matrix;
}

std::optional<QubitSet> MultiLayer::support_of(int q) const {
    for (const auto &s : csign) {
        if (s.contains(q)) {
            return s;
        }
    }
    return std::nullopt;
}

QacCircuit::QacCircuit(int qubits, int inputs, std::vector<Layer> layers)
    : qubits_(qubits), inputs_(inputs), layers_(std::move(layers)) {
}

QacCircuit QacCircuit::from_layers(int qubits, int inputs, std::vector<SingleLayer> singles,
                                   std::vector<MultiLayer> multis) {
    if (singles.size() != multis.size() + 1) {
        throw InvalidArgument("a circuit of depth d needs d+1 single-qubit layers");
    }
    std::vector<Layer> layers;
    for (size_t i = 0; i < multis.size(); i++) {
        layers.emplace_back(std::move(singles[i]));
        layers.emplace_back(std::move(multis[i]));
    }
    layers.emplace_back(std::move(singles.back()));
    return QacCircuit(qubits, inputs, std::move(layers));
}

QacCircuit QacCircuit::canonicalize(int qubits, int inputs, std::vector<Layer> layers) {
    std::vector<Layer> out;
    for (auto &layer : layers) {
        bool is_multi = std::holds_alternative<MultiLayer>(layer);
        if (is_multi && (out.empty() || std::holds_alternative<MultiLayer>(out.back()))) {
            out.emplace_back(SingleLayer{});
        }
        out.push_back(std::move(layer));
    }
    if (out.empty() || std::holds_alternative<MultiLayer>(out.back())) {
        out.emplace_back(SingleLayer{});
    }
    return QacCircuit(qubits, inputs, std::move(out));
}

int QacCircuit::depth() const {
    int d = 0;
    for (const auto &layer : layers_) {
        d += std::holds_alternative<MultiLayer>(layer);
    }
    return d;
}

const SingleLayer &QacCircuit::single_layer(int k) const {
    size_t idx = 2 * static_cast<size_t>(k);
    if (k < 0 || idx >= layers_.size() || !std::holds_alternative<SingleLayer>(layers_[idx])) {
        throw InvalidArgument("no single-qubit layer " + std::to_string(k) + ".5 in canonical form");
    }
    return std::get<SingleLayer>(layers_[idx]);
}

SingleLayer &QacCircuit::single_layer(int k) {
    return const_cast<SingleLayer &>(std::as_const(*this).single_layer(k));
}

const MultiLayer &QacCircuit::multi_layer(int l) const {
    size_t idx = 2 * static_cast<size_t>(l) - 1;
    if (l < 1 || idx >= layers_.size() || !std::holds_alternative<MultiLayer>(layers_[idx])) {
        throw InvalidArgument("no multi-qubit layer " + std::to_string(l) + " in canonical form");
    }
    return std::get<MultiLayer>(layers_[idx]);
}

std::vector<std::string> validate_circuit(const QacCircuit &c) {
    std::vector<std::string> issues;
    if (c.qubits() < 1 || c.qubits() > kMaxStateQubits) {
        issues.push_back("qubit count " + std::to_string(c.qubits()) + " outside 1.." +
                         std::to_string(kMaxStateQubits));
    }
    if (c.inputs() < 1 || c.inputs() > c.qubits()) {
        issues.push_back("input count " + std::to_string(c.inputs()) + " must be in 1..qubits (" +
                         std::to_string(c.qubits()) + ")");
    }
    const auto &layers = c.layers();
    if (layers.empty()) {
        issues.push_back("circuit has no layers");
    }
    for (size_t i = 0; i < layers.size(); i++) {
        const std::string where = "layer " + std::to_string(i);
        bool expect_single = i % 2 == 0;
        bool is_single = std::holds_alternative<SingleLayer>(layers[i]);
        if (expect_single != is_single) {
            issues.push_back(where + ": expected a " + std::string(expect_single ? "single" : "multi") +
                             " layer (layers must alternate single, multi, ..., single)");
        }
        if (is_single) {
            for (const auto &[q, g] : std::get<SingleLayer>(layers[i]).gates) {
                if (q < 1 || q > c.qubits()) {
                    issues.push_back(where + ": single-qubit gate on qubit " + std::to_string(q) + " out of range");
                }
                if (!is_unitary(g.matrix, kUnitarityTolerance)) {
                    issues.push_back(where + ": gate on qubit " + std::to_string(q) + " is not unitary (residual " +
                                     std::to_string(unitarity_residual(g.matrix)) + ")");
                }
            }
        } else {
            const auto &ml = std::get<MultiLayer>(layers[i]);
            QubitSet used;
            for (const auto &s : ml.csign) {
                if (s.max_label() > c.qubits()) {
                    issues.push_back(where + ": C-SIGN support " + s.str() + " has qubits out of range");
                }
                if (s.intersects(used)) {
                    issues.push_back(where + ": C-SIGN support " + s.str() + " overlaps another support on qubits " +
                                     (s & used).str());
                }
                used = used | s;
            }
        }
    }
    if (!layers.empty() && std::holds_alternative<MultiLayer>(layers.back())) {
        issues.push_back("last layer must be a single-qubit layer");
    }
    return issues;
}

void require_valid(const QacCircuit &c) {
    auto issues = validate_circuit(c);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
}

static void apply_layer_inplace(ComplexVector &v, int n, const Layer &layer) {
    if (const auto *sl = std::get_if<SingleLayer>(&layer)) {
        for (const auto &[q, g] : sl->gates) {
            kernels::apply_1q(v.data(), n, g.matrix, q);
        }
    } else {
        for (const auto &s : std::get<MultiLayer>(layer).csign) {
            kernels::apply_phase_on_ones(v.data(), n, index_mask(s, n), Complex(-1.0, 0.0));
        }
    }
}

static void check_input(const QacCircuit &c, const QuantumState &input) {
    require_valid(c);
    if (input.qubits() != c.qubits()) {
        throw InvalidArgument("input state has " + std::to_string(input.qubits()) + " qubits, circuit acts on " +
                              std::to_string(c.qubits()));
    }
}

QuantumState apply_circuit(const QacCircuit &c, const QuantumState &input) {
    check_input(c, input);
    ComplexVector v = input.amplitudes();
    for (const auto &layer : c.layers()) {
        apply_layer_inplace(v, c.qubits(), layer);
    }
    return make_state_unchecked(c.qubits(), std::move(v));
}

std::vector<QuantumState> apply_circuit_trace(const QacCircuit &c, const QuantumState &input) {
    check_input(c, input);
    std::vector<QuantumState> states{input};
    ComplexVector v = input.amplitudes();
    for (const auto &layer : c.layers()) {
        apply_layer_inplace(v, c.qubits(), layer);
        states.push_back(make_state_unchecked(c.qubits(), v));
    }
    return states;
}

QacCircuit invert_circuit(const QacCircuit &c) {
    std::vector<Layer> layers;
    for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it) {
        if (const auto *sl = std::get_if<SingleLayer>(&*it)) {
            SingleLayer inv;
            for (const auto &[q, g] : sl->gates) {
                inv.gates.emplace(q, g.adjoint());
            }
            layers.emplace_back(std::move(inv));
        } else {
            layers.push_back(*it);
        }
    }
    return QacCircuit(c.qubits(), c.inputs(), std::move(layers));
}

std::string target_kind_name(TargetKind kind) {
    switch (kind) {
        case TargetKind::Parity:
            return "parity";
        case TargetKind::Fanout:
            return "fanout";
        case TargetKind::Toffoli:
            return "toffoli";
        case TargetKind::Unitary:
            return "unitary";
    }
    return "unknown";
}

ComplexVector CleanTarget::image(uint64_t x, int n) const {
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    if (kind == TargetKind::Unitary) {
        if (unitary.rows() != dim || unitary.cols() != dim) {
            throw InvalidArgument("target unitary must be " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        return unitary.col(static_cast<Eigen::Index>(x));
    }
    if (n < 2) {
        throw InvalidArgument("named targets need at least 2 input qubits");
    }
    std::vector<int> order;
    for (int q = 1; q <= n; q++) {
        order.push_back(q);
    }
    StructuredGate g = kind == TargetKind::Parity    ? StructuredGate::parity(order)
                       : kind == TargetKind::Fanout  ? StructuredGate::fanout(order)
                                                     : StructuredGate::toffoli(order);
    ComplexVector v = ComplexVector::Zero(dim);
    v[static_cast<Eigen::Index>(classical_gate_image(g, x, n))] = 1.0;
    return v;
}

CleanSimulationReport check_clean_simulation(const QacCircuit &c, const CleanTarget &target, double tol,
                                             bool phase_free) {
    require_valid(c);
    const int m = c.qubits();
    const int n = c.inputs();
    if (target.kind == TargetKind::Unitary && !is_unitary(target.unitary, 1e-9)) {
        throw InvalidArgument("target matrix is not unitary");
    }
    CleanSimulationReport report;
    report.phase_free = phase_free;
    const uint64_t inputs = uint64_t{1} << n;
    const int shift = m - n;
    const auto dim_anc = static_cast<Eigen::Index>(uint64_t{1} << shift);
    for (uint64_t x = 0; x < inputs; x++) {
        QuantumState out = apply_circuit(c, QuantumState::basis(m, x << shift));
        ComplexVector g = target.image(x, n);
        // (G|x>) (x) |0^{m-n}>
        ComplexVector expected = ComplexVector::Zero(static_cast<Eigen::Index>(uint64_t{1} << m));
        for (Eigen::Index j = 0; j < g.size(); j++) {
            expected[j * dim_anc] = g[j];
        }
        double d;
        if (phase_free) {
            double overlap = std::norm(expected.dot(out.amplitudes()));
            d = std::sqrt(std::max(0.0, 1.0 - overlap));
        } else {
            d = (out.amplitudes() - expected).norm();
        }
        report.distances.push_back(d);
        if (d > report.max_distance || x == 0) {
            report.max_distance = d;
            report.worst_input = x;
        }
    }
    report.passed = report.max_distance < tol;
    return report;
}

WeakParityReport check_weak_parity(const QacCircuit &c, const std::optional<QuantumState> &ancilla, double tol) {
    require_valid(c);
    const int m = c.qubits();
    const int n = c.inputs();
    if (ancilla && ancilla->qubits() != m - n) {
        throw InvalidArgument("ancilla state has " + std::to_string(ancilla->qubits()) + " qubits, expected " +
                              std::to_string(m - n));
    }
    WeakParityReport report;
    const uint64_t target_bit = uint64_t{1} << index_bit(1, m);
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        QuantumState in = ancilla ? QuantumState::tensor(QuantumState::basis(n, x), *ancilla)
                                  : QuantumState::basis(m, x << (m - n));
        QuantumState out = apply_circuit(c, in);
        const int want = std::popcount(x) % 2;
        double wrong = 0;
        for (uint64_t i = 0; i < out.dim(); i++) {
            int got = (i & target_bit) ? 1 : 0;
            if (got != want) {
                wrong += std::norm(out.amplitude(i));
            }
        }
        double leak = std::sqrt(wrong);
        report.leakage.push_back(leak);
        if (leak > report.max_leakage || x == 0) {
            report.max_leakage = leak;
            report.worst_input = x;
        }
    }
    report.passed = report.max_leakage < tol;
    return report;
}

MixingClass classify_mixing(const Matrix2c &gate, double tol) {
    MixingClass out;
    out.mixing = gate.cwiseAbs().minCoeff() >= tol;
    if (out.mixing) {
        return out;
    }
    double theta, phi;
    out.with_x = std::abs(gate(0, 1)) > std::abs(gate(0, 0));
    if (out.with_x) {
        theta = std::arg(gate(1, 0));
        phi = std::arg(gate(0, 1));
    } else {
        theta = std::arg(gate(0, 0));
        phi = std::arg(gate(1, 1));
    }
    out.alpha = (theta - phi) / 2;
    out.beta = (theta + phi) / 2;
    const Complex i(0, 1);
    Matrix2c rebuilt = Matrix2c::Zero();
    rebuilt(0, 0) = std::exp(i * out.alpha);
    rebuilt(1, 1) = std::exp(-i * out.alpha);
    if (out.with_x) {
        rebuilt = gates::pauli_x() * rebuilt;
    }
    rebuilt *= std::exp(i * out.beta);
    out.reconstruction_error = (rebuilt - gate).cwiseAbs().maxCoeff();
    return out;
}

QubitRoleReport classify_qubit_roles(const QacCircuit &c, double tol) {
    require_valid(c);
    const int d = c.depth();
    QubitRoleReport report;
    for (int q = 1; q <= c.qubits(); q++) {
        QubitRole role;
        role.qubit = q;
        role.pass_in = !classify_mixing(c.single_layer(0).gate_on(q), tol).mixing;
        role.pass_through = !classify_mixing(c.single_layer(d).gate_on(q), tol).mixing;
        for (int l = 1; l <= d; l++) {
            role.gates.push_back(c.multi_layer(l).support_of(q));
        }
        report.roles.push_back(std::move(role));
    }
    return report;
}

}  // namespace qaclab
