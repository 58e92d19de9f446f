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

#include "qaclab/gates.hpp"

#include <cmath>
#include <set>

#include "qaclab/errors.hpp"

namespace qaclab {

namespace gates {

Matrix2c identity() {
    return Matrix2c::Identity();
}

Matrix2c hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix2c h;
    h << r, r, r, -r;
    return h;
}

Matrix2c pauli_x() {
    Matrix2c x;
    x << 0, 1, 1, 0;
    return x;
}

Matrix2c pauli_y() {
    Matrix2c y;
    y << 0, Complex(0, -1), Complex(0, 1), 0;
    return y;
}

Matrix2c pauli_z() {
    Matrix2c z;
    z << 1, 0, 0, -1;
    return z;
}

Matrix2c zyz(double global_phase, double theta, double phi, double lambda) {
    const Complex i(0, 1);
    auto rz = [&](double a) {
        Matrix2c m = Matrix2c::Zero();
        m(0, 0) = std::exp(-i * (a / 2));
        m(1, 1) = std::exp(i * (a / 2));
        return m;
    };
    Matrix2c ry;
    ry << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    return std::exp(i * global_phase) * (rz(phi) * ry * rz(lambda));
}

Matrix2c random(std::mt19937_64 &rng) {
    return random_unitary_haar(2, rng);
}

}  // namespace gates

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::CSign:
            return "csign";
        case GateKind::GEta:
            return "geta";
        case GateKind::Parity:
            return "parity";
        case GateKind::Fanout:
            return "fanout";
        case GateKind::Toffoli:
            return "toffoli";
    }
    return "unknown";
}

void check_eta(Complex eta) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12) {
        throw InvalidArgument("eta must have unit modulus");
    }
    if (std::abs(eta - Complex(1.0, 0.0)) <= 1e-12) {
        throw InvalidArgument("eta must differ from 1");
    }
}

StructuredGate StructuredGate::csign(QubitSet support) {
    return StructuredGate{GateKind::CSign, support.labels(), Complex(-1.0, 0.0)};
}

StructuredGate StructuredGate::geta(QubitSet support, Complex eta) {
    check_eta(eta);
    return StructuredGate{GateKind::GEta, support.labels(), eta};
}

StructuredGate StructuredGate::parity(std::vector<int> target_first) {
    return StructuredGate{GateKind::Parity, std::move(target_first), Complex(-1.0, 0.0)};
}

StructuredGate StructuredGate::fanout(std::vector<int> control_first) {
    return StructuredGate{GateKind::Fanout, std::move(control_first), Complex(-1.0, 0.0)};
}

StructuredGate StructuredGate::toffoli(std::vector<int> target_first) {
    return StructuredGate{GateKind::Toffoli, std::move(target_first), Complex(-1.0, 0.0)};
}

QubitSet StructuredGate::support() const {
    return QubitSet(qubits);
}

std::string StructuredGate::str() const {
    std::string out = gate_kind_name(kind) + "(";
    for (size_t i = 0; i < qubits.size(); i++) {
        out += (i ? "," : "") + std::to_string(qubits[i]);
    }
    return out + ")";
}

static void check_gate_qubits(const StructuredGate &gate, int n) {
    std::set<int> seen;
    for (int q : gate.qubits) {
        if (q < 1 || q > n) {
            throw InvalidArgument(gate.str() + ": qubit " + std::to_string(q) + " outside a register of " +
                                  std::to_string(n) + " qubits");
        }
        if (!seen.insert(q).second) {
            throw InvalidArgument(gate.str() + ": qubit " + std::to_string(q) + " listed twice");
        }
    }
    bool ordered = gate.kind == GateKind::Parity || gate.kind == GateKind::Fanout || gate.kind == GateKind::Toffoli;
    if (ordered && gate.qubits.size() < 2) {
        throw InvalidArgument(gate.str() + ": needs at least 2 qubits");
    }
}

uint64_t classical_gate_image(const StructuredGate &gate, uint64_t x, int n) {
    auto bit = [&](int q) { return static_cast<int>((x >> index_bit(q, n)) & 1); };
    const int head = gate.qubits.front();
    switch (gate.kind) {
        case GateKind::Parity: {
            int p = 0;
            for (size_t i = 1; i < gate.qubits.size(); i++) {
                p ^= bit(gate.qubits[i]);
            }
            return x ^ (static_cast<uint64_t>(p) << index_bit(head, n));
        }
        case GateKind::Fanout: {
            if (!bit(head)) {
                return x;
            }
            uint64_t out = x;
            for (size_t i = 1; i < gate.qubits.size(); i++) {
                out ^= uint64_t{1} << index_bit(gate.qubits[i], n);
            }
            return out;
        }
        case GateKind::Toffoli: {
            int all = 1;
            for (size_t i = 1; i < gate.qubits.size(); i++) {
                all &= bit(gate.qubits[i]);
            }
            return x ^ (static_cast<uint64_t>(all) << index_bit(head, n));
        }
        default:
            throw InvalidArgument(gate.str() + " is not a classical permutation gate");
    }
}

QuantumState apply_structured_gate(const QuantumState &state, const StructuredGate &gate) {
    const int n = state.qubits();
    check_gate_qubits(gate, n);
    switch (gate.kind) {
        case GateKind::CSign:
        case GateKind::GEta: {
            Complex phase = gate.kind == GateKind::CSign ? Complex(-1.0, 0.0) : gate.eta;
            if (gate.kind == GateKind::GEta) {
                check_eta(phase);
            }
            ComplexVector v = state.amplitudes();
            kernels::apply_phase_on_ones(v.data(), n, index_mask(gate.support(), n), phase);
            return make_state_unchecked(n, std::move(v));
        }
        case GateKind::Parity:
        case GateKind::Fanout:
        case GateKind::Toffoli: {
            ComplexVector v(state.amplitudes().size());
            for (uint64_t x = 0; x < state.dim(); x++) {
                v[static_cast<Eigen::Index>(classical_gate_image(gate, x, n))] = state.amplitude(x);
            }
            return make_state_unchecked(n, std::move(v));
        }
    }
    throw InternalError("unhandled gate kind");
}

}  // namespace qaclab
