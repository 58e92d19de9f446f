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

#ifndef QACLAB_ENTANGLEMENT_HPP
#define QACLAB_ENTANGLEMENT_HPP

#include <optional>
#include <vector>

#include "qaclab/state.hpp"

namespace qaclab {

/// Best rank-1 factorization psi ~ factor_a (x) factor_b across (part_a, part_b).
/// The factors are unit states on the ascending labels of each part; the
/// phase of the leading Schmidt term is kept in factor_b.
struct ProductFactors {
    QubitSet part_a;
    QubitSet part_b;
    QuantumState factor_a;
    QuantumState factor_b;
    /// || psi - factor_a (x) factor_b ||
    double residual;
    double second_singular_value;
};

ProductFactors product_factors(const QuantumState &state, QubitSet part_a);

/// Amplitude <x|factor> for a string x whose domain is the factor's part.
Complex factor_amplitude(const QuantumState &factor, const BitString &x);

struct BipartitionEvidence {
    QubitSet part_a;
    double second_singular_value;
};

struct SeparabilityResult {
    bool separable = false;
    /// Lexicographically smallest separating part A.
    std::optional<ProductFactors> witness;
    /// One entry per bipartition (A, B) with 1 in A that splits S, in
    /// lexicographic order of A.
    std::vector<BipartitionEvidence> evidence;
};

/// S-separable iff some bipartition splitting S has second Schmidt value < tol.
SeparabilityResult s_separability(const QuantumState &state, QubitSet s, double tol = kDefaultTolerance);

enum class SimplifyKind { Disappears, SimplifiesTo, NoSimplify };

std::string simplify_kind_name(SimplifyKind kind);

struct SimplifyStatus {
    SimplifyKind kind = SimplifyKind::NoSimplify;
    /// T for SimplifiesTo; S otherwise.
    QubitSet reduced_support;
    /// Qubits of S pinned to |1>, i.e. S minus T.
    QubitSet pinned;
    /// Squared amplitude on strings that are 1 throughout S.
    double ones_mass = 0;
};

/// Whether G_eta(S) disappears on the state (no mass on 1_S, tested first),
/// simplifies to S minus the maximal set of qubits pinned to |1>, or neither.
SimplifyStatus simplify_status(const QuantumState &state, QubitSet s, Complex eta = Complex(-1.0, 0.0),
                               double tol = kDefaultTolerance);

/// G_eta on the qubits of S; eta = -1 is the C-SIGN gate.
QuantumState apply_geta(const QuantumState &state, QubitSet s, Complex eta);

struct EntanglementLemmaResult {
    /// psi S-entangled, or G psi S-entangled, or G simplifies on psi.
    bool holds = false;
    bool psi_entangled = false;
    bool phi_entangled = false;
    bool simplifies = false;
    SeparabilityResult psi;
    SeparabilityResult phi;
    SimplifyStatus simplify;
    QuantumState phi_state;
};

EntanglementLemmaResult entanglement_lemma_check(const QuantumState &state, QubitSet s,
                                                 Complex eta = Complex(-1.0, 0.0), double tol = kDefaultTolerance);

}  // namespace qaclab

#endif
