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

#ifndef QACLAB_PHASE_EQUATIONS_HPP
#define QACLAB_PHASE_EQUATIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qaclab/linalg.hpp"

namespace qaclab {

/// The three product-equation systems used to rule out simultaneous
/// separability of psi and G_eta psi.
///
///   FourSets:  a_jk b_lm = c_jl d_km, except a_11 b_11 = eta c_11 d_11
///   ThreeSets: a_jk b_m  = c_j d_km,  except a_11 b_1  = eta c_1 d_11
///   TwoSets:   a_j b_m   = c_j d_m,   except a_1 b_1   = eta c_1 d_1
enum class EquationCase { FourSets, ThreeSets, TwoSets };

std::string equation_case_name(EquationCase c);
/// Accepts "4sets", "3sets", "2sets" (case-insensitive).
EquationCase parse_equation_case(const std::string &text);

/// Value arrays. Two-index arrays are stored row-major, x_jk at 2*j+k.
/// Sizes: FourSets (4,4,4,4), ThreeSets (4,2,2,4), TwoSets (2,2,2,2).
struct EquationValues {
    EquationCase kind = EquationCase::TwoSets;
    Complex eta{-1.0, 0.0};
    std::vector<Complex> a, b, c, d;

    /// Throws InvalidArgument on wrong sizes or eta = 1.
    void validate() const;
};

struct EquationCheck {
    bool hypotheses_ok = false;
    bool applicable = false;
    bool conclusion_ok = false;
    /// Hypotheses imply the conclusion whenever applicable.
    bool consistent = false;
    /// One residual per hypothesis equation, in index order (j,k,l,m bits).
    std::vector<double> hypothesis_residuals;
    double max_hypothesis_residual = 0;
    /// Moduli of the concluded-zero products.
    std::vector<double> conclusion_residuals;
    /// Which alternative of the disjunction held, e.g. "c00=c01=c10=0".
    std::string branch;
};

EquationCheck check_equations(const EquationValues &v, double tol = kDefaultTolerance);

/// A random instance satisfying every hypothesis with the nonzero
/// precondition active. Free moduli lie in [0.5, 1.5] with random phases.
EquationValues generate_equation_instance(EquationCase kind, uint64_t seed);

}  // namespace qaclab

#endif
