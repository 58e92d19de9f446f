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

#include "qaclab/phase_equations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "qaclab/errors.hpp"

namespace qaclab {

namespace {

std::pair<size_t, size_t> sizes_b_c(EquationCase kind) {
    switch (kind) {
        case EquationCase::FourSets:
            return {4, 4};
        case EquationCase::ThreeSets:
        case EquationCase::TwoSets:
            return {2, 2};
    }
    return {0, 0};
}

size_t size_a_d(EquationCase kind) {
    return kind == EquationCase::TwoSets ? 2 : 4;
}

double max_abs(std::initializer_list<Complex> xs) {
    double m = 0;
    for (Complex x : xs) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

}  // namespace

std::string equation_case_name(EquationCase c) {
    switch (c) {
        case EquationCase::FourSets:
            return "4sets";
        case EquationCase::ThreeSets:
            return "3sets";
        case EquationCase::TwoSets:
            return "2sets";
    }
    return "unknown";
}

EquationCase parse_equation_case(const std::string &text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (t == "4sets") return EquationCase::FourSets;
    if (t == "3sets") return EquationCase::ThreeSets;
    if (t == "2sets") return EquationCase::TwoSets;
    throw InvalidArgument("unknown equation case '" + text + "' (expected 4sets, 3sets or 2sets)");
}

void EquationValues::validate() const {
    auto [nb, nc] = sizes_b_c(kind);
    size_t nad = size_a_d(kind);
    std::vector<std::string> issues;
    auto expect = [&](const char *name, const std::vector<Complex> &x, size_t want) {
        if (x.size() != want) {
            issues.push_back(std::string("array ") + name + " has " + std::to_string(x.size()) + " entries, " +
                             equation_case_name(kind) + " needs " + std::to_string(want));
        }
    };
    expect("a", a, nad);
    expect("b", b, nb);
    expect("c", c, nc);
    expect("d", d, nad);
    if (std::abs(eta - Complex(1.0, 0.0)) <= 1e-12) {
        issues.push_back("eta must differ from 1");
    }
    if (!issues.empty()) {
        std::string msg = issues[0];
        for (size_t i = 1; i < issues.size(); i++) msg += "; " + issues[i];
        throw InvalidArgument(msg);
    }
}

EquationCheck check_equations(const EquationValues &v, double tol) {
    v.validate();
    EquationCheck out;
    const Complex eta = v.eta;
    const auto &a = v.a;
    const auto &b = v.b;
    const auto &c = v.c;
    const auto &d = v.d;
    switch (v.kind) {
        case EquationCase::FourSets: {
            for (int bits = 0; bits < 16; bits++) {
                int j = (bits >> 3) & 1, k = (bits >> 2) & 1, l = (bits >> 1) & 1, m = bits & 1;
                Complex lhs = a[2 * j + k] * b[2 * l + m];
                Complex rhs = c[2 * j + l] * d[2 * k + m];
                if (bits == 15) rhs *= eta;
                out.hypothesis_residuals.push_back(std::abs(lhs - rhs));
            }
            out.applicable = std::abs(a[3]) >= tol && std::abs(b[3]) >= tol;
            double c_off = max_abs({c[0], c[1], c[2]});
            double d_off = max_abs({d[0], d[1], d[2]});
            for (int r = 0; r < 2; r++) {
                for (int s = 0; s < 2; s++) {
                    out.conclusion_residuals.push_back(std::abs(a[2 * r] * b[s]));
                    out.conclusion_residuals.push_back(std::abs(a[r] * b[2 * s]));
                    out.conclusion_residuals.push_back(std::abs(c[2 * r] * d[s]));
                    out.conclusion_residuals.push_back(std::abs(c[r] * d[2 * s]));
                }
            }
            if (c_off < tol) {
                out.branch = "c00=c01=c10=0";
            } else if (d_off < tol) {
                out.branch = "d00=d01=d10=0";
            }
            break;
        }
        case EquationCase::ThreeSets: {
            for (int bits = 0; bits < 8; bits++) {
                int j = (bits >> 2) & 1, k = (bits >> 1) & 1, m = bits & 1;
                Complex lhs = a[2 * j + k] * b[m];
                Complex rhs = c[j] * d[2 * k + m];
                if (bits == 7) rhs *= eta;
                out.hypothesis_residuals.push_back(std::abs(lhs - rhs));
            }
            out.applicable = std::abs(a[3]) >= tol && std::abs(b[1]) >= tol;
            out.conclusion_residuals = {std::abs(a[0] * b[0]), std::abs(c[0] * d[0]), std::abs(a[1] * b[0]),
                                        std::abs(c[0] * d[2])};
            if (std::abs(c[0]) < tol) {
                out.branch = "c0=0";
            } else if (max_abs({d[0], d[2]}) < tol) {
                out.branch = "d00=d10=0";
            }
            break;
        }
        case EquationCase::TwoSets: {
            for (int bits = 0; bits < 4; bits++) {
                int j = (bits >> 1) & 1, m = bits & 1;
                Complex lhs = a[j] * b[m];
                Complex rhs = c[j] * d[m];
                if (bits == 3) rhs *= eta;
                out.hypothesis_residuals.push_back(std::abs(lhs - rhs));
            }
            out.applicable = std::abs(a[1]) >= tol && std::abs(b[1]) >= tol;
            out.conclusion_residuals = {std::abs(a[0] * b[0]), std::abs(c[0] * d[0])};
            out.branch = "a0b0=c0d0=0";
            break;
        }
    }
    out.max_hypothesis_residual =
        *std::max_element(out.hypothesis_residuals.begin(), out.hypothesis_residuals.end());
    out.hypotheses_ok = out.max_hypothesis_residual < tol;
    bool products_zero = std::all_of(out.conclusion_residuals.begin(), out.conclusion_residuals.end(),
                                     [tol](double r) { return r < tol; });
    bool disjunction = v.kind == EquationCase::TwoSets || !out.branch.empty();
    out.conclusion_ok = disjunction && products_zero;
    if (!out.conclusion_ok) {
        out.branch.clear();
    }
    out.consistent = !out.hypotheses_ok || !out.applicable || out.conclusion_ok;
    return out;
}

EquationValues generate_equation_instance(EquationCase kind, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> modulus(0.5, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> eta_phase(0.3, 2.0 * M_PI - 0.3);
    auto free = [&]() { return std::polar(modulus(rng), phase(rng)); };

    EquationValues v;
    v.kind = kind;
    v.eta = std::polar(1.0, eta_phase(rng));
    const Complex eta = v.eta;
    const Complex zero(0.0, 0.0);
    switch (kind) {
        case EquationCase::TwoSets: {
            Complex a1 = free(), b1 = free(), c1 = free();
            Complex d1 = a1 * b1 / (eta * c1);
            std::bernoulli_distribution branch(0.5);
            if (branch(rng)) {
                Complex b0 = free();
                Complex d0 = a1 * b0 / c1;
                v.a = {zero, a1};
                v.b = {b0, b1};
                v.c = {zero, c1};
                v.d = {d0, d1};
            } else {
                Complex a0 = free();
                Complex c0 = a0 * b1 / d1;
                v.a = {a0, a1};
                v.b = {zero, b1};
                v.c = {c0, c1};
                v.d = {zero, d1};
            }
            break;
        }
        case EquationCase::ThreeSets: {
            Complex a11 = free(), b1 = free(), c0 = free(), c1 = free(), d01 = free();
            Complex d11 = a11 * b1 / (eta * c1);
            v.a = {c0 * d01 / b1, c0 * d11 / b1, c1 * d01 / b1, a11};
            v.b = {zero, b1};
            v.c = {c0, c1};
            v.d = {zero, d01, zero, d11};
            break;
        }
        case EquationCase::FourSets: {
            Complex a11 = free(), b11 = free(), c11 = free(), d01 = free(), d10 = free();
            Complex d11 = a11 * b11 / (eta * c11);
            Complex d00 = d01 * d10 / (eta * d11);
            v.a = {zero, zero, a11 * d01 / (eta * d11), a11};
            v.b = {zero, zero, c11 * d10 / a11, b11};
            v.c = {zero, zero, zero, c11};
            v.d = {d00, d01, d10, d11};
            break;
        }
    }
    return v;
}

}  // namespace qaclab
