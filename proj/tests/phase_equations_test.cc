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

#include "qaclab/phase_equations.hpp"
#include "qaclab/errors.hpp"

using namespace qaclab;

namespace {

// Largest hypothesis residual, written out per system independently of the library.
double hypothesis_oracle(const EquationValues &v) {
    double worst = 0;
    auto x2 = [](const std::vector<Complex> &x, int j, int k) { return x[static_cast<size_t>(2 * j + k)]; };
    for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++)
            for (int l = 0; l < 2; l++)
                for (int m = 0; m < 2; m++) {
                    Complex lhs, rhs;
                    bool all = j && k && l && m;
                    if (v.kind == EquationCase::FourSets) {
                        lhs = x2(v.a, j, k) * x2(v.b, l, m);
                        rhs = x2(v.c, j, l) * x2(v.d, k, m);
                    } else if (v.kind == EquationCase::ThreeSets) {
                        if (l) continue;
                        all = j && k && m;
                        lhs = x2(v.a, j, k) * v.b[m];
                        rhs = v.c[j] * x2(v.d, k, m);
                    } else {
                        if (k || l) continue;
                        all = j && m;
                        lhs = v.a[j] * v.b[m];
                        rhs = v.c[j] * v.d[m];
                    }
                    if (all) rhs *= v.eta;
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

}  // namespace

class EquationCases : public ::testing::TestWithParam<EquationCase> {};

TEST_P(EquationCases, generated_instances_satisfy_hypotheses_and_conclusion) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto v = generate_equation_instance(GetParam(), seed);
        EXPECT_LT(hypothesis_oracle(v), 1e-12);
        EXPECT_NE(v.eta, Complex(1, 0));
        EXPECT_NEAR(std::abs(v.eta), 1, 1e-15);
        auto chk = check_equations(v, 1e-8);
        EXPECT_TRUE(chk.hypotheses_ok);
        EXPECT_TRUE(chk.applicable);
        EXPECT_TRUE(chk.conclusion_ok) << chk.branch;
        EXPECT_TRUE(chk.consistent);
        EXPECT_FALSE(chk.branch.empty());
        EXPECT_NEAR(chk.max_hypothesis_residual, hypothesis_oracle(v), 1e-15);
    }
}

TEST_P(EquationCases, perturbation_is_flagged) {
    std::mt19937_64 rng(99);
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto v = generate_equation_instance(GetParam(), seed);
        std::vector<Complex> *arrays[] = {&v.a, &v.b, &v.c, &v.d};
        auto &arr = *arrays[rng() % 4];
        arr[rng() % arr.size()] += std::polar(1e-5, 1.0);
        EXPECT_GT(hypothesis_oracle(v), 1e-8);
        EXPECT_FALSE(check_equations(v, 1e-8).hypotheses_ok) << "seed " << seed;
    }
}

TEST_P(EquationCases, generator_is_deterministic) {
    auto a = generate_equation_instance(GetParam(), 5);
    auto b = generate_equation_instance(GetParam(), 5);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.eta, b.eta);
}

INSTANTIATE_TEST_SUITE_P(AllCases, EquationCases,
                         ::testing::Values(EquationCase::FourSets, EquationCase::ThreeSets, EquationCase::TwoSets),
                         [](const auto &info) { return "case_" + equation_case_name(info.param); });

TEST(Equations, case_names_roundtrip) {
    for (auto c : {EquationCase::FourSets, EquationCase::ThreeSets, EquationCase::TwoSets}) {
        EXPECT_EQ(parse_equation_case(equation_case_name(c)), c);
    }
    EXPECT_EQ(parse_equation_case("4SETS"), EquationCase::FourSets);
    EXPECT_THROW(parse_equation_case("5sets"), std::exception);
}

TEST(Equations, validation) {
    EquationValues v;
    v.kind = EquationCase::TwoSets;
    v.a = v.b = v.c = v.d = {1, 1};
    v.eta = 1;
    EXPECT_THROW(v.validate(), InvalidArgument);
    v.eta = -1;
    v.d = {1, 1, 1};
    EXPECT_THROW(v.validate(), InvalidArgument);
}

TEST(Equations, not_applicable_when_corner_vanishes) {
    // a1 = 0 switches the nonzero precondition off, so no conclusion is demanded.
    EquationValues v;
    v.kind = EquationCase::TwoSets;
    v.eta = -1;
    v.a = {1, 0};
    v.b = {1, 1};
    v.c = {1, 0};
    v.d = {1, 1};
    auto chk = check_equations(v);
    EXPECT_TRUE(chk.hypotheses_ok);
    EXPECT_FALSE(chk.applicable);
    EXPECT_FALSE(chk.conclusion_ok);
    EXPECT_TRUE(chk.consistent);
}
