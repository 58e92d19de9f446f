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
#include "qaclab/test_strings.hpp"
#include "test_util.hpp"

using namespace qaclab;
using namespace qaclab::testing;

TEST(TestStrings, quadrants_and_membership) {
    auto q = quadrants(QubitSet{1, 2, 3}, QubitSet{1, 2}, QubitSet{1, 3}, 4);
    EXPECT_EQ(q[0], QubitSet{1});
    EXPECT_EQ(q[1], QubitSet{2});
    EXPECT_EQ(q[2], QubitSet{3});
    EXPECT_TRUE(q[3].empty());
    // zeros needed in {1}, {2}, {3}; qubit 4 is free
    EXPECT_TRUE(is_test_string(BitString::parse("0001"), QubitSet{1, 2, 3}, QubitSet{1, 2}, QubitSet{1, 3}));
    EXPECT_FALSE(is_test_string(BitString::parse("1001"), QubitSet{1, 2, 3}, QubitSet{1, 2}, QubitSet{1, 3}));
}

TEST(TestStrings, gluing) {
    auto x = BitString::parse("0000");
    auto u = BitString::parse("1111");
    // part {1,2,3}; first = {1,2}, second = {3,4}
    auto g = glued_strings(x, u, QubitSet{1, 2, 3}, QubitSet{1, 2}, QubitSet{3, 4});
    EXPECT_EQ(g[0].str(), "000");
    EXPECT_EQ(g[1].str(), "001");
    EXPECT_EQ(g[2].str(), "110");
    EXPECT_EQ(g[3].str(), "111");
    EXPECT_EQ(g[3].domain(), (QubitSet{1, 2, 3}));
}

namespace {

struct WitnessCase {
    int n;
    QubitSet s, a, c;
    int expected_case;
};

}  // namespace

TEST(TestStrings, refutation_witness_on_random_products) {
    const WitnessCase cases[] = {
        {4, QubitSet{1, 2, 3, 4}, QubitSet{1, 2}, QubitSet{1, 3}, 1},
        {4, QubitSet{1, 2, 3}, QubitSet{1, 2}, QubitSet{1, 3}, 2},
        {4, QubitSet{1, 2, 3}, QubitSet{3, 4}, QubitSet{1, 3}, 2},
        {3, QubitSet{1, 2}, QubitSet{1}, QubitSet{1}, 3},
        {4, QubitSet{1, 2}, QubitSet{1, 3}, QubitSet{2, 4}, 3},
        {5, QubitSet{2, 3, 5}, QubitSet{1, 2, 4}, QubitSet{2, 3}, 2},
    };
    std::mt19937_64 rng(31);
    for (const auto &wc : cases) {
        for (int t = 0; t < 5; t++) {
            auto psi = random_product_state(wc.n, wc.a, rng);
            auto phi = apply_geta(psi, wc.s, Complex(-1, 0));
            auto b = find_test_string_witness(psi, phi, wc.s, wc.a, wc.c, Complex(-1, 0), kDefaultTolerance,
                                              WitnessMode::Refutation);
            EXPECT_EQ(b.case_number, wc.expected_case);
            EXPECT_TRUE(b.y_is_test_string);
            EXPECT_TRUE(b.gluing_identity);
            EXPECT_TRUE(is_test_string(b.y, wc.s, wc.a, wc.c));
            for (int q : wc.s.labels()) EXPECT_EQ(b.u.value(q), 1);
            // a00 b00 is the amplitude of y under the product factorization of psi
            EXPECT_NEAR(std::abs(b.a[0] * b.b[0]), std::abs(psi.amplitude(b.y)), 1e-12);
            EXPECT_GE(std::abs(b.y_amplitude), kDefaultTolerance);
            EXPECT_TRUE(b.contradiction);
            EXPECT_FALSE(b.equations_check.hypotheses_ok);
            EXPECT_GT(b.phi_second_singular_value, kDefaultTolerance);
        }
    }
}

TEST(TestStrings, strict_mode_preconditions) {
    std::mt19937_64 rng(32);
    auto psi = random_product_state(3, QubitSet{1}, rng);
    auto phi = apply_geta(psi, QubitSet{1, 2}, Complex(-1, 0));
    EXPECT_THROW(find_test_string_witness(psi, phi, QubitSet{1, 2}, QubitSet{1}, QubitSet{1}), PreconditionError);
    // bipartition that does not split S
    EXPECT_THROW(find_test_string_witness(psi, phi, QubitSet{1, 2}, QubitSet{1, 2}, QubitSet{1}), PreconditionError);
    // simplifying gate: qubit 1 fixed to |1>
    auto pinned = QuantumState::tensor(QuantumState::basis("1"), QuantumState::random(2, rng));
    EXPECT_THROW(find_test_string_witness(pinned, apply_geta(pinned, QubitSet{1, 2}, Complex(-1, 0)), QubitSet{1, 2},
                                          QubitSet{1}, QubitSet{1}),
                 PreconditionError);
    // entangled psi
    auto ent = QuantumState::random(3, rng);
    EXPECT_THROW(find_test_string_witness(ent, ent, QubitSet{1, 2}, QubitSet{1}, QubitSet{1}, Complex(-1, 0),
                                          kDefaultTolerance, WitnessMode::Refutation),
                 PreconditionError);
}

TEST(TestStrings, mapped_equations_use_inverse_phase) {
    std::mt19937_64 rng(33);
    Complex eta = std::polar(1.0, 1.0);
    auto psi = random_product_state(3, QubitSet{1}, rng);
    auto phi = apply_geta(psi, QubitSet{1, 2}, eta);
    auto b = find_test_string_witness(psi, phi, QubitSet{1, 2}, QubitSet{1}, QubitSet{1}, eta, kDefaultTolerance,
                                      WitnessMode::Refutation);
    EXPECT_NEAR(std::abs(b.equations.eta - 1.0 / eta), 0, 1e-15);
    EXPECT_EQ(b.equations.kind, EquationCase::TwoSets);
}
