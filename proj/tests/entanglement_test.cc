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

#include "qaclab/errors.hpp"
#include "qaclab/gates.hpp"
#include "test_util.hpp"

using namespace qaclab;
using namespace qaclab::testing;

namespace {

QuantumState ghz(int n) {
    ComplexVector v = ComplexVector::Zero(1 << n);
    v[0] = v[(1 << n) - 1] = 1;
    return QuantumState::normalized(n, v);
}

}  // namespace

TEST(ProductFactors, reconstructs_product_state) {
    std::mt19937_64 rng(2);
    auto psi = random_product_state(4, QubitSet{2, 4}, rng);
    auto f = product_factors(psi, QubitSet{2, 4});
    EXPECT_LT(f.residual, 1e-12);
    EXPECT_LT(f.second_singular_value, 1e-12);
    EXPECT_EQ(f.factor_a.qubits(), 2);
    for (uint64_t x = 0; x < 16; x++) {
        auto bx = BitString::from_index(x, 4);
        Complex prod = factor_amplitude(f.factor_a, bx.restrict_to(QubitSet{2, 4})) *
                       factor_amplitude(f.factor_b, bx.restrict_to(QubitSet{1, 3}));
        EXPECT_NEAR(std::abs(prod - psi.amplitude(x)), 0, 1e-12);
    }
}

TEST(ProductFactors, ghz_residual) {
    auto f = product_factors(ghz(3), QubitSet{1});
    EXPECT_NEAR(f.second_singular_value, 1 / std::sqrt(2.0), 1e-12);
    // distance to the nearest normalized product: sqrt(2 - 2 s1)
    EXPECT_NEAR(f.residual, std::sqrt(2 - std::sqrt(2.0)), 1e-12);
}

TEST(Separability, ghz_is_entangled_on_every_pair) {
    auto psi = ghz(3);
    auto r = s_separability(psi, QubitSet{1, 2});
    EXPECT_FALSE(r.separable);
    EXPECT_FALSE(r.witness.has_value());
    // bipartitions with 1 in A splitting {1,2}: {1}, {1,3}
    ASSERT_EQ(r.evidence.size(), 2u);
    EXPECT_EQ(r.evidence[0].part_a, QubitSet{1});
    EXPECT_EQ(r.evidence[1].part_a, (QubitSet{1, 3}));
}

TEST(Separability, witness_is_lexicographically_first) {
    // Bell pair on {1,3}, qubit 2 in |+>.
    ComplexVector v = ComplexVector::Zero(8);
    for (uint64_t x : {0b000u, 0b010u, 0b101u, 0b111u}) v[x] = 0.5;
    QuantumState psi(3, v);
    auto r = s_separability(psi, QubitSet{1, 2, 3});
    ASSERT_TRUE(r.separable);
    EXPECT_EQ(r.witness->part_a, (QubitSet{1, 3}));
    EXPECT_FALSE(s_separability(psi, QubitSet{1, 3}).separable);
    EXPECT_TRUE(s_separability(psi, QubitSet{2, 3}).separable);
    EXPECT_THROW(s_separability(psi, QubitSet{2}), InvalidArgument);
}

TEST(Separability, agrees_with_rank1_oracle) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; t++) {
        int n = 2 + t % 3;
        QubitSet s = random_subset(n, 2, rng);
        QuantumState psi = QuantumState::random(n, rng);
        if (t % 2 == 0) {
            // split S between a random nonempty proper part and its complement
            QubitSet a;
            do {
                a = random_subset(n, 1, rng);
            } while (!a.intersects(s) || !(s - a).intersects(s) || a == QubitSet::range(1, n));
            psi = random_product_state(n, a, rng);
        }
        bool oracle = oracle_min_residual(psi, s) < 1e-9;
        auto r = s_separability(psi, s);
        EXPECT_EQ(r.separable, oracle) << "instance " << t;
        if (t % 2 == 0) {
            EXPECT_TRUE(r.separable);
        }
        if (r.separable) {
            EXPECT_LT(r.witness->residual, 1e-9);
        }
    }
}

TEST(Simplify, enumeration_oracle) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        int n = 2 + t % 4;
        QubitSet s = random_subset(n, 1, rng);
        // Random support with some qubits pinned to 1 and some amplitudes cut.
        ComplexVector v = random_unit_vector(1 << n, rng);
        QubitSet pin = random_subset(n, 0, rng) & s;
        if (t % 3 == 0) pin = QubitSet{};
        for (uint64_t x = 0; x < static_cast<uint64_t>(v.size()); x++) {
            if ((x & index_mask(pin, n)) != index_mask(pin, n)) v[static_cast<Eigen::Index>(x)] = 0;
        }
        if (t % 7 == 0) {
            for (uint64_t x = 0; x < static_cast<uint64_t>(v.size()); x++) {
                if ((x & index_mask(s, n)) == index_mask(s, n)) v[static_cast<Eigen::Index>(x)] = 0;
            }
        }
        if (v.norm() == 0) continue;
        auto psi = QuantumState::normalized(n, v);

        double ones = 0;
        QubitSet pinned_oracle;
        for (uint64_t x = 0; x < psi.dim(); x++) {
            if ((x & index_mask(s, n)) == index_mask(s, n)) ones += std::norm(psi.amplitude(x));
        }
        for (int q : s.labels()) {
            double zero = 0;
            for (uint64_t x = 0; x < psi.dim(); x++) {
                if (!((x >> index_bit(q, n)) & 1)) zero += std::norm(psi.amplitude(x));
            }
            if (zero < 1e-18) pinned_oracle.insert(q);
        }
        auto st = simplify_status(psi, s);
        if (ones < 1e-18) {
            EXPECT_EQ(st.kind, SimplifyKind::Disappears);
        } else if (!pinned_oracle.empty()) {
            EXPECT_EQ(st.kind, SimplifyKind::SimplifiesTo);
            EXPECT_EQ(st.pinned, pinned_oracle);
            EXPECT_EQ(st.reduced_support, s - pinned_oracle);
        } else {
            EXPECT_EQ(st.kind, SimplifyKind::NoSimplify);
        }
    }
}

TEST(Simplify, disappears_takes_precedence) {
    // Qubit 1 pinned to |1>, qubit 2 pinned to |0>: no mass on 11, and qubit 1 is pinned.
    auto psi = QuantumState::basis("10");
    auto st = simplify_status(psi, QubitSet{1, 2});
    EXPECT_EQ(st.kind, SimplifyKind::Disappears);
    EXPECT_EQ(simplify_kind_name(st.kind), "disappears");
}

TEST(Simplify, fully_pinned_support_simplifies_to_empty_set) {
    auto st = simplify_status(QuantumState::basis("11"), QubitSet{1, 2});
    EXPECT_EQ(st.kind, SimplifyKind::SimplifiesTo);
    EXPECT_TRUE(st.reduced_support.empty());
}

TEST(Geta, matches_structured_gate) {
    std::mt19937_64 rng(12);
    auto psi = QuantumState::random(3, rng);
    Complex eta(0, 1);
    auto a = apply_geta(psi, QubitSet{2, 3}, eta);
    auto b = apply_structured_gate(psi, StructuredGate::geta(QubitSet{2, 3}, eta));
    EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-15);
}

TEST(EntanglementLemma, holds_on_random_instances) {
    std::mt19937_64 rng(13);
    const Complex etas[] = {Complex(-1, 0), Complex(0, 1), std::polar(1.0, M_PI / 3)};
    for (int t = 0; t < 150; t++) {
        int n = 2 + t % 4;
        QubitSet s = random_subset(n, 2, rng);
        QuantumState psi = (t % 2) ? QuantumState::random(n, rng) : random_product_state(n, QubitSet::range(1, n / 2), rng);
        auto r = entanglement_lemma_check(psi, s, etas[t % 3]);
        EXPECT_TRUE(r.holds) << "instance " << t;
        EXPECT_EQ(r.holds, r.psi_entangled || r.phi_entangled || r.simplifies);
    }
}

TEST(EntanglementLemma, product_input_stays_product_only_when_gate_simplifies) {
    // |+>|+> through CZ becomes entangled.
    ComplexVector v = ComplexVector::Constant(4, 0.5);
    auto r = entanglement_lemma_check(QuantumState(2, v), QubitSet{1, 2});
    EXPECT_FALSE(r.psi_entangled);
    EXPECT_TRUE(r.phi_entangled);
    // |1>|+>: CZ acts as Z on qubit 2, still a product.
    ComplexVector w = ComplexVector::Zero(4);
    w[2] = w[3] = 1 / std::sqrt(2.0);
    auto r2 = entanglement_lemma_check(QuantumState(2, w), QubitSet{1, 2});
    EXPECT_FALSE(r2.psi_entangled);
    EXPECT_FALSE(r2.phi_entangled);
    EXPECT_TRUE(r2.simplifies);
    EXPECT_TRUE(r2.holds);
}
