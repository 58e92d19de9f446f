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

#include <gtest/gtest.h>

#include <numbers>

#include "qaclab/errors.hpp"
#include "qaclab/gates.hpp"

using namespace qaclab;

namespace {

double max_dev(const QuantumState &a, const QuantumState &b) {
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

QuantumState apply_hadamards(QuantumState s, const std::vector<int> &qs) {
    for (int q : qs) s = apply_single_qubit(s, gates::hadamard(), q);
    return s;
}

// Classical images computed bit by bit from the gate definitions.
uint64_t parity_oracle(uint64_t x, const std::vector<int> &qs, int n) {
    uint64_t acc = 0;
    for (int q : qs) acc ^= (x >> index_bit(q, n)) & 1;
    uint64_t old = (x >> index_bit(qs[0], n)) & 1;
    return x ^ ((acc ^ old) << index_bit(qs[0], n));
}

uint64_t fanout_oracle(uint64_t x, const std::vector<int> &qs, int n) {
    uint64_t c = (x >> index_bit(qs[0], n)) & 1;
    for (size_t i = 1; i < qs.size(); i++) x ^= c << index_bit(qs[i], n);
    return x;
}

uint64_t toffoli_oracle(uint64_t x, const std::vector<int> &qs, int n) {
    uint64_t all = 1;
    for (size_t i = 1; i < qs.size(); i++) all &= (x >> index_bit(qs[i], n)) & 1;
    return x ^ (all << index_bit(qs[0], n));
}

}  // namespace

TEST(SingleQubit, named_gates_are_unitary) {
    for (const auto &g : {gates::identity(), gates::hadamard(), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()}) {
        EXPECT_TRUE(is_unitary(g));
    }
    EXPECT_TRUE((gates::hadamard() * gates::hadamard()).isIdentity(1e-15));
}

TEST(SingleQubit, zyz_assembly) {
    using std::numbers::pi;
    Matrix2c u = gates::zyz(pi / 2, pi / 2, 0, pi);
    EXPECT_LT(unitarity_residual(u), 1e-12);
    // Rz(0) Ry(pi/2) Rz(pi) times i is the Hadamard up to the chosen phase
    Matrix2c expected;
    const double r = 1 / std::sqrt(2.0);
    Complex i(0, 1);
    Matrix2c rz_pi;
    rz_pi << -i, 0, 0, i;
    Matrix2c ry;
    ry << r, -r, r, r;
    expected = i * ry * rz_pi;
    EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u - gates::hadamard()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SingleQubit, random_is_unitary) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; i++) EXPECT_TRUE(is_unitary(gates::random(rng)));
}

TEST(State, rejects_unnormalized) {
    EXPECT_THROW(QuantumState(1, ComplexVector::Ones(2)), InvalidArgument);
    EXPECT_THROW(QuantumState::normalized(2, ComplexVector::Zero(4)), InvalidArgument);
}

TEST(State, basis_and_tensor) {
    auto s = QuantumState::tensor(QuantumState::basis("10"), QuantumState::basis("1"));
    EXPECT_EQ(s.qubits(), 3);
    EXPECT_EQ(s.amplitude(0b101), Complex(1));
    EXPECT_EQ(s.amplitude(BitString::parse("101")), Complex(1));
}

TEST(State, single_qubit_gate_on_labeled_qubit) {
    auto s = apply_single_qubit(QuantumState::basis("000"), gates::pauli_x(), 2);
    EXPECT_EQ(s.amplitude(0b010), Complex(1));
    auto h = apply_single_qubit(QuantumState::basis("000"), gates::hadamard(), 3);
    EXPECT_NEAR(h.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(apply_single_qubit(s, gates::hadamard(), 4), InvalidArgument);
    Matrix2c bad = Matrix2c::Identity() * 2.0;
    EXPECT_THROW(apply_single_qubit(s, bad, 1), ValidationError);
}

TEST(State, masses_and_reduced_density) {
    std::mt19937_64 rng(3);
    auto s = QuantumState::random(3, rng);
    double ones = 0, zero2 = 0;
    for (uint64_t x = 0; x < 8; x++) {
        if ((x & 0b011) == 0b011) ones += std::norm(s.amplitude(x));
        if (!(x & 0b010)) zero2 += std::norm(s.amplitude(x));
    }
    EXPECT_NEAR(s.mass_all_ones(QubitSet{2, 3}), ones, 1e-15);
    EXPECT_NEAR(s.mass_with_zero(2), zero2, 1e-15);
    auto rho = s.reduced_density_matrix(2);
    EXPECT_NEAR(rho(0, 0).real(), zero2, 1e-14);
    EXPECT_NEAR(rho.trace().real(), 1, 1e-14);
}

TEST(Parity, subspace_dimension_and_classification) {
    auto p0 = parity_subspace_basis(4, 0);
    EXPECT_EQ(p0.dimension(), 8);
    for (int i = 0; i < p0.dimension(); i++) {
        auto v = p0.vector(i);
        for (uint64_t x = 0; x < 16; x++) {
            if (std::abs(v[static_cast<Eigen::Index>(x)]) > 0) {
                EXPECT_EQ(std::popcount(x) % 2, 0);
            }
        }
    }
    EXPECT_EQ(classify_state_parity(QuantumState::basis("0110")).pure_bit, 0);
    EXPECT_EQ(classify_state_parity(QuantumState::basis("0111")).pure_bit, 1);
    auto plus = apply_single_qubit(QuantumState::basis("00"), gates::hadamard(), 1);
    auto c = classify_state_parity(plus);
    EXPECT_FALSE(c.pure_bit.has_value());
    EXPECT_NEAR(c.leakage, 1 / std::sqrt(2.0), 1e-12);
}

TEST(StructuredGates, csign_flips_only_all_ones) {
    std::mt19937_64 rng(9);
    auto s = QuantumState::random(4, rng);
    auto out = apply_structured_gate(s, StructuredGate::csign(QubitSet{1, 3}));
    for (uint64_t x = 0; x < 16; x++) {
        bool ones = (x & 0b1010) == 0b1010;
        EXPECT_NEAR(std::abs(out.amplitude(x) - (ones ? -1.0 : 1.0) * s.amplitude(x)), 0, 1e-15);
    }
    auto neg = apply_structured_gate(s, StructuredGate::csign(QubitSet{}));
    EXPECT_LT((neg.amplitudes() + s.amplitudes()).norm(), 1e-15);
}

TEST(StructuredGates, geta_phase) {
    Complex eta = std::polar(1.0, 0.7);
    auto s = apply_single_qubit(apply_single_qubit(QuantumState::basis("00"), gates::hadamard(), 1), gates::hadamard(),
                                2);
    auto out = apply_structured_gate(s, StructuredGate::geta(QubitSet{1, 2}, eta));
    EXPECT_NEAR(std::abs(out.amplitude(3) - 0.5 * eta), 0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(2) - 0.5), 0, 1e-15);
    EXPECT_THROW(check_eta(Complex(1, 0)), InvalidArgument);
    EXPECT_THROW(check_eta(Complex(0.5, 0)), InvalidArgument);
}

TEST(StructuredGates, classical_gates_match_permutation_oracles) {
    const int n = 5;
    std::vector<int> qs{3, 1, 5, 2};
    for (uint64_t x = 0; x < 32; x++) {
        EXPECT_EQ(classical_gate_image(StructuredGate::parity(qs), x, n), parity_oracle(x, qs, n)) << x;
        EXPECT_EQ(classical_gate_image(StructuredGate::fanout(qs), x, n), fanout_oracle(x, qs, n)) << x;
        EXPECT_EQ(classical_gate_image(StructuredGate::toffoli(qs), x, n), toffoli_oracle(x, qs, n)) << x;
        auto out = apply_structured_gate(QuantumState::basis(n, x), StructuredGate::parity(qs));
        EXPECT_EQ(out.amplitude(parity_oracle(x, qs, n)), Complex(1));
    }
}

TEST(StructuredGates, rejects_bad_supports) {
    auto s = QuantumState::basis("000");
    EXPECT_THROW(apply_structured_gate(s, StructuredGate::parity({1, 1})), InvalidArgument);
    EXPECT_THROW(apply_structured_gate(s, StructuredGate::fanout({1, 4})), InvalidArgument);
    EXPECT_THROW(apply_structured_gate(s, StructuredGate::toffoli({2})), InvalidArgument);
}

TEST(Identities, parity_is_hadamard_conjugated_fanout) {
    std::mt19937_64 rng(21);
    for (int k = 2; k <= 5; k++) {
        std::vector<int> qs;
        for (int q = 1; q <= k; q++) qs.push_back(q);
        for (int t = 0; t < 10; t++) {
            auto s = QuantumState::random(k, rng);
            auto lhs = apply_structured_gate(s, StructuredGate::parity(qs));
            auto rhs = apply_hadamards(apply_structured_gate(apply_hadamards(s, qs), StructuredGate::fanout(qs)), qs);
            EXPECT_LT(max_dev(lhs, rhs), 1e-12);
        }
    }
}

TEST(Identities, toffoli_is_hadamard_conjugated_csign) {
    std::mt19937_64 rng(22);
    for (int k = 2; k <= 5; k++) {
        std::vector<int> qs;
        for (int q = 1; q <= k; q++) qs.push_back(q);
        auto s = QuantumState::random(k, rng);
        auto lhs = apply_structured_gate(s, StructuredGate::toffoli(qs));
        auto rhs = apply_hadamards(apply_structured_gate(apply_hadamards(s, {1}), StructuredGate::csign(QubitSet::range(1, k))),
                                   {1});
        EXPECT_LT(max_dev(lhs, rhs), 1e-12);
    }
}
