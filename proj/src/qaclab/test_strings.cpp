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

#include "qaclab/test_strings.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "qaclab/errors.hpp"
#include "qaclab/gates.hpp"

namespace qaclab {

namespace {

/// The string over [n] with the largest |<x|psi>| among those accepted by
/// `keep`; ties go to the smallest index.
std::optional<BitString> argmax_string(const QuantumState &psi, const std::function<bool(uint64_t)> &keep) {
    const int n = psi.qubits();
    std::optional<uint64_t> best;
    double best_abs = -1;
    for (uint64_t idx = 0; idx < psi.dim(); idx++) {
        if (!keep(idx)) continue;
        double v = std::abs(psi.amplitude(idx));
        if (v > best_abs) {
            best_abs = v;
            best = idx;
        }
    }
    if (!best) return std::nullopt;
    return BitString::from_index(*best, n);
}

std::function<bool(uint64_t)> zero_in(QubitSet q, int n) {
    const uint64_t mask = index_mask(q, n);
    return [mask](uint64_t idx) { return (idx & mask) != mask; };
}

std::function<bool(uint64_t)> both(std::function<bool(uint64_t)> f, std::function<bool(uint64_t)> g) {
    return [f = std::move(f), g = std::move(g)](uint64_t idx) { return f(idx) && g(idx); };
}

/// One side (A or B) of the test-string recipe: glue a C-part and a D-part
/// when both quadrants of this side are nonempty, else take any string with
/// a 0 in S ∩ side.
BitString side_string(const QuantumState &psi, QubitSet s, QubitSet side, QubitSet part_c, QubitSet part_d,
                      double tol, bool &from_recipe) {
    const int n = psi.qubits();
    QubitSet qc = s & side & part_c;
    QubitSet qd = s & side & part_d;
    if (!qc.empty() && !qd.empty()) {
        auto yc = argmax_string(psi, zero_in(qc, n));
        auto yd = argmax_string(psi, zero_in(qd, n));
        if (!yc || !yd) {
            throw InternalError("no string with a 0 in " + qc.str() + " or " + qd.str());
        }
        BitString glued = yc->restrict_to(part_c).unite(yd->restrict_to(part_d));
        if (std::abs(psi.amplitude(glued)) >= tol) {
            return glued;
        }
        from_recipe = false;
        auto direct = argmax_string(psi, both(zero_in(qc, n), zero_in(qd, n)));
        return *direct;
    }
    auto y = argmax_string(psi, zero_in(s & side, n));
    if (!y) {
        throw InternalError("no string with a 0 in " + (s & side).str());
    }
    return *y;
}

std::array<Complex, 4> amplitudes_of(const QuantumState &factor, const std::array<BitString, 4> &xs) {
    std::array<Complex, 4> out;
    for (int i = 0; i < 4; i++) out[i] = factor_amplitude(factor, xs[i]);
    return out;
}

}  // namespace

std::array<BitString, 4> glued_strings(const BitString &x, const BitString &u, QubitSet part, QubitSet first,
                                       QubitSet second) {
    std::array<BitString, 4> out;
    QubitSet p0 = part & first;
    QubitSet p1 = part & second;
    if ((p0 | p1) != part) {
        throw InvalidArgument("sets " + first.str() + " and " + second.str() + " do not cover " + part.str());
    }
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            BitString lo = (j ? u : x).restrict_to(p0);
            BitString hi = (k ? u : x).restrict_to(p1);
            out[2 * j + k] = lo.unite(hi);
        }
    }
    return out;
}

std::array<QubitSet, 4> quadrants(QubitSet s, QubitSet part_a, QubitSet part_c, int n) {
    QubitSet all = QubitSet::range(1, n);
    QubitSet part_b = all - part_a;
    QubitSet part_d = all - part_c;
    return {s & part_a & part_c, s & part_a & part_d, s & part_b & part_c, s & part_b & part_d};
}

bool is_test_string(const BitString &x, QubitSet s, QubitSet part_a, QubitSet part_c) {
    QubitSet all = x.domain();
    for (QubitSet q : quadrants(s, part_a, part_c, all.max_label())) {
        if (!q.empty() && !x.has_zero_in(q)) {
            return false;
        }
    }
    return true;
}

TestStringBundle find_test_string_witness(const QuantumState &psi, const QuantumState &phi, QubitSet s,
                                          QubitSet part_a, QubitSet part_c, Complex eta, double tol,
                                          WitnessMode mode) {
    check_eta(eta);
    const int n = psi.qubits();
    if (phi.qubits() != n) {
        throw InvalidArgument("psi has " + std::to_string(n) + " qubits but phi has " +
                              std::to_string(phi.qubits()));
    }
    const QubitSet all = QubitSet::range(1, n);
    if (s.size() < 2 || !s.is_subset_of(all)) {
        throw InvalidArgument("gate support " + s.str() + " must have at least 2 qubits inside the register");
    }
    auto splits = [&](QubitSet p, const char *name) {
        if (!p.is_subset_of(all) || !p.intersects(s) || !(all - p).intersects(s)) {
            throw PreconditionError(std::string("bipartition ") + name + "=" + p.str() + " does not split S=" +
                                    s.str());
        }
    };
    splits(part_a, "A");
    splits(part_c, "C");

    SimplifyStatus st = simplify_status(psi, s, eta, tol);
    if (st.kind == SimplifyKind::Disappears) {
        throw PreconditionError("no string u with u = 1 on S has nonzero amplitude: G disappears on psi");
    }
    if (st.kind == SimplifyKind::SimplifiesTo) {
        throw PreconditionError("G simplifies on psi to " + st.reduced_support.str() + " (pinned " +
                                st.pinned.str() + ")");
    }

    TestStringBundle out;
    out.s = s;
    auto q = quadrants(s, part_a, part_c, n);
    int empty = 0;
    for (QubitSet x : q) empty += x.empty() ? 1 : 0;
    if (empty > 2) {
        throw InternalError("more than two empty quadrants for splitting bipartitions");
    }
    out.case_number = empty + 1;

    QubitSet a = part_a, c = part_c;
    auto swap_ab = [&]() {
        a = all - a;
        out.swapped_ab = !out.swapped_ab;
    };
    auto swap_cd = [&]() {
        c = all - c;
        out.swapped_cd = !out.swapped_cd;
    };
    // quadrant order: AC, AD, BC, BD
    if (out.case_number == 2) {
        if (q[0].empty()) {
            swap_ab();
        } else if (q[1].empty()) {
            swap_ab();
            swap_cd();
        } else if (q[3].empty()) {
            swap_cd();
        }
    } else if (out.case_number == 3 && q[0].empty()) {
        swap_cd();
    }
    out.part_a = a;
    out.part_b = all - a;
    out.part_c = c;
    out.part_d = all - c;
    out.quadrant_sets = quadrants(s, a, c, n);

    ProductFactors pf = product_factors(psi, out.part_a);
    out.psi_second_singular_value = pf.second_singular_value;
    if (pf.residual >= tol) {
        throw PreconditionError("psi is not a product across A=" + out.part_a.str() + " (residual " +
                                std::to_string(pf.residual) + ")");
    }
    ProductFactors qf = product_factors(phi, out.part_c);
    out.phi_second_singular_value = qf.second_singular_value;
    if (mode == WitnessMode::Strict && qf.residual >= tol) {
        throw PreconditionError("phi is not a product across C=" + out.part_c.str() + " (residual " +
                                std::to_string(qf.residual) + ")");
    }

    BitString y_a = side_string(psi, s, out.part_a, out.part_c, out.part_d, tol, out.y_from_recipe);
    BitString y_b = side_string(psi, s, out.part_b, out.part_c, out.part_d, tol, out.y_from_recipe);
    out.y = y_a.restrict_to(out.part_a).unite(y_b.restrict_to(out.part_b));
    out.y_amplitude = psi.amplitude(out.y);
    out.y_is_test_string = is_test_string(out.y, s, out.part_a, out.part_c);
    if (std::abs(out.y_amplitude) < tol) {
        throw InternalError("glued test string " + out.y.str() + " has vanishing amplitude");
    }

    // Off-S cells whose u-values enter the nonzero precondition of the case.
    QubitSet match;
    if (out.case_number >= 2) match = match | ((out.part_b & out.part_c) - s);
    if (out.case_number == 3) match = match | ((out.part_a & out.part_d) - s);
    const uint64_t s_mask = index_mask(s, n);
    const uint64_t m_mask = index_mask(match, n);
    const uint64_t y_idx = out.y.to_index(n);
    auto ones_on_s = [s_mask](uint64_t idx) { return (idx & s_mask) == s_mask; };
    auto u_pref = argmax_string(psi, [&](uint64_t idx) { return ones_on_s(idx) && (idx & m_mask) == (y_idx & m_mask); });
    if (u_pref && std::abs(psi.amplitude(*u_pref)) >= tol) {
        out.u = *u_pref;
        out.u_matches_y = true;
    } else {
        out.u = *argmax_string(psi, ones_on_s);
    }
    if (std::abs(psi.amplitude(out.u)) < tol) {
        throw PreconditionError("no string u with u = 1 on S has nonzero amplitude");
    }

    out.x_a = glued_strings(out.y, out.u, out.part_a, out.part_c, out.part_d);
    out.x_b = glued_strings(out.y, out.u, out.part_b, out.part_c, out.part_d);
    out.x_c = glued_strings(out.y, out.u, out.part_c, out.part_a, out.part_b);
    out.x_d = glued_strings(out.y, out.u, out.part_d, out.part_a, out.part_b);
    out.gluing_identity = true;
    for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++)
            for (int l = 0; l < 2; l++)
                for (int m = 0; m < 2; m++) {
                    if (!(out.x_a[2 * j + k].unite(out.x_b[2 * l + m]) ==
                          out.x_c[2 * j + l].unite(out.x_d[2 * k + m]))) {
                        out.gluing_identity = false;
                    }
                }

    out.a = amplitudes_of(pf.factor_a, out.x_a);
    out.b = amplitudes_of(pf.factor_b, out.x_b);
    out.c = amplitudes_of(qf.factor_a, out.x_c);
    out.d = amplitudes_of(qf.factor_b, out.x_d);

    EquationValues &v = out.equations;
    v.eta = 1.0 / eta;
    switch (out.case_number) {
        case 1:
            v.kind = EquationCase::FourSets;
            v.a = {out.a.begin(), out.a.end()};
            v.b = {out.b.begin(), out.b.end()};
            v.c = {out.c.begin(), out.c.end()};
            v.d = {out.d.begin(), out.d.end()};
            break;
        case 2:
            v.kind = EquationCase::ThreeSets;
            v.a = {out.a.begin(), out.a.end()};
            v.b = {out.b[0], out.b[1]};
            v.c = {out.c[0], out.c[2]};
            v.d = {out.d.begin(), out.d.end()};
            break;
        default:
            v.kind = EquationCase::TwoSets;
            v.a = {out.a[0], out.a[2]};
            v.b = {out.b[0], out.b[1]};
            v.c = {out.c[0], out.c[2]};
            v.d = {out.d[0], out.d[1]};
            break;
    }
    out.equations_check = check_equations(v, tol);
    out.contradiction = out.equations_check.applicable && std::abs(out.a[0] * out.b[0]) >= tol;
    return out;
}

}  // namespace qaclab
