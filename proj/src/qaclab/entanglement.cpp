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

#include "qaclab/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qaclab/errors.hpp"
#include "qaclab/gates.hpp"

namespace qaclab {

ProductFactors product_factors(const QuantumState &state, QubitSet part_a) {
    const int n = state.qubits();
    ComplexMatrix m = bipartition_matrix(state.amplitudes(), n, part_a);
    QubitSet part_b = QubitSet::range(1, n) - part_a;
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    ComplexVector fa = svd.matrixU().col(0);
    ComplexVector fb = svd.matrixV().col(0).conjugate();
    QuantumState factor_a = QuantumState::normalized(part_a.size(), fa);
    QuantumState factor_b = QuantumState::normalized(part_b.size(), fb);
    ComplexMatrix rebuilt = factor_a.amplitudes() * factor_b.amplitudes().transpose();
    double residual = (m - rebuilt).norm();
    double s2 = svd.singularValues().size() > 1 ? svd.singularValues()[1] : 0.0;
    return ProductFactors{part_a, part_b, std::move(factor_a), std::move(factor_b), residual, s2};
}

Complex factor_amplitude(const QuantumState &factor, const BitString &x) {
    const QubitSet dom = x.domain();
    if (dom.size() != factor.qubits()) {
        throw InvalidArgument("string domain " + dom.str() + " does not match a factor of " +
                              std::to_string(factor.qubits()) + " qubits");
    }
    uint64_t idx = 0;
    for (int q : dom.labels()) {
        idx = (idx << 1) | static_cast<uint64_t>(x.value(q));
    }
    return factor.amplitude(idx);
}

SeparabilityResult s_separability(const QuantumState &state, QubitSet s, double tol) {
    const int n = state.qubits();
    const QubitSet all = QubitSet::range(1, n);
    if (s.size() < 2) {
        throw InvalidArgument("S-separability needs |S| >= 2, got " + s.str());
    }
    if (!s.is_subset_of(all)) {
        throw InvalidArgument("set " + s.str() + " is not inside the register");
    }
    std::vector<QubitSet> candidates;
    const uint64_t rest = uint64_t{1} << (n - 1);
    for (uint64_t sub = 0; sub < rest; sub++) {
        // labels 2..n take the bits of sub
        QubitSet a = QubitSet::from_mask(1 | (sub << 1));
        QubitSet b = all - a;
        if (b.empty() || !a.intersects(s) || !b.intersects(s)) {
            continue;
        }
        candidates.push_back(a);
    }
    std::sort(candidates.begin(), candidates.end(), QubitSet::lex_less);

    SeparabilityResult out;
    for (QubitSet a : candidates) {
        auto sv = schmidt_singular_values(state, a);
        double s2 = sv.size() > 1 ? sv[1] : 0.0;
        out.evidence.push_back({a, s2});
        if (s2 < tol && !out.separable) {
            out.separable = true;
            out.witness = product_factors(state, a);
        }
    }
    return out;
}

std::string simplify_kind_name(SimplifyKind kind) {
    switch (kind) {
        case SimplifyKind::Disappears:
            return "disappears";
        case SimplifyKind::SimplifiesTo:
            return "simplifies_to";
        case SimplifyKind::NoSimplify:
            return "no_simplify";
    }
    return "unknown";
}

SimplifyStatus simplify_status(const QuantumState &state, QubitSet s, Complex eta, double tol) {
    check_eta(eta);
    if (s.empty()) {
        throw InvalidArgument("simplification status needs a nonempty gate support");
    }
    if (s.max_label() > state.qubits()) {
        throw InvalidArgument("gate support " + s.str() + " is not inside the register");
    }
    SimplifyStatus out;
    out.reduced_support = s;
    out.ones_mass = state.mass_all_ones(s);
    const double zero = tol * tol;
    if (out.ones_mass < zero) {
        out.kind = SimplifyKind::Disappears;
        return out;
    }
    for (int q : s.labels()) {
        if (state.mass_with_zero(q) < zero) {
            out.pinned.insert(q);
        }
    }
    if (!out.pinned.empty()) {
        out.kind = SimplifyKind::SimplifiesTo;
        out.reduced_support = s - out.pinned;
    }
    return out;
}

QuantumState apply_geta(const QuantumState &state, QubitSet s, Complex eta) {
    return apply_structured_gate(state, StructuredGate::geta(s, eta));
}

EntanglementLemmaResult entanglement_lemma_check(const QuantumState &state, QubitSet s, Complex eta, double tol) {
    QuantumState phi = apply_geta(state, s, eta);
    SeparabilityResult psi_sep = s_separability(state, s, tol);
    SeparabilityResult phi_sep = s_separability(phi, s, tol);
    SimplifyStatus st = simplify_status(state, s, eta, tol);
    EntanglementLemmaResult out{false, !psi_sep.separable, !phi_sep.separable, st.kind != SimplifyKind::NoSimplify,
                                std::move(psi_sep), std::move(phi_sep), st, std::move(phi)};
    out.holds = out.psi_entangled || out.phi_entangled || out.simplifies;
    return out;
}

}  // namespace qaclab
