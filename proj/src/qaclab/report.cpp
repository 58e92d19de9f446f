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

#include "qaclab/report.hpp"

#include <cstdio>

namespace qaclab {

namespace {

Json list(const std::vector<double> &xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(x);
    return out;
}

Json complex_list(const std::array<Complex, 4> &xs) {
    Json out = Json::array();
    for (Complex z : xs) out.push_back(complex_to_json(z));
    return out;
}

Json strings_json(const std::array<BitString, 4> &xs) {
    Json out = Json::array();
    for (const auto &x : xs) out.push_back(bit_string_json(x));
    return out;
}

}  // namespace

Json Report::to_json() const {
    Json out;
    out["schema"] = kReportSchema;
    out["command"] = command;
    out["inputs_digest"] = inputs_digest;
    out["tolerance"] = tolerance;
    out["seed"] = seed;
    out["verdict"] = verdict;
    out["result"] = result;
    if (wall_seconds) out["timing"] = Json{{"wall_seconds", *wall_seconds}};
    return out;
}

std::string fnv1a64_hex(const std::string &data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json qubit_set_json(QubitSet s) {
    Json out = Json::array();
    for (int q : s.labels()) out.push_back(q);
    return out;
}

Json bit_string_json(const BitString &x) {
    Json out;
    out["qubits"] = qubit_set_json(x.domain());
    out["bits"] = x.str();
    return out;
}

Json matrix2_json(const Eigen::Matrix2cd &m) {
    return matrix_to_json(m);
}

Json to_json(const CleanSimulationReport &r) {
    Json out;
    out["passed"] = r.passed;
    out["phase_free"] = r.phase_free;
    out["max_distance"] = r.max_distance;
    out["worst_input"] = r.worst_input;
    out["distances"] = list(r.distances);
    return out;
}

Json to_json(const WeakParityReport &r) {
    Json out;
    out["passed"] = r.passed;
    out["max_leakage"] = r.max_leakage;
    out["worst_input"] = r.worst_input;
    out["leakage"] = list(r.leakage);
    return out;
}

Json to_json(const ProductFactors &f) {
    Json out;
    out["part_a"] = qubit_set_json(f.part_a);
    out["part_b"] = qubit_set_json(f.part_b);
    out["residual"] = f.residual;
    out["second_singular_value"] = f.second_singular_value;
    out["factor_a"] = state_to_json(f.factor_a);
    out["factor_b"] = state_to_json(f.factor_b);
    return out;
}

Json to_json(const SeparabilityResult &r) {
    Json out;
    out["separable"] = r.separable;
    out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    Json ev = Json::array();
    for (const auto &e : r.evidence) {
        ev.push_back(Json{{"part_a", qubit_set_json(e.part_a)}, {"second_singular_value", e.second_singular_value}});
    }
    out["evidence"] = ev;
    return out;
}

Json to_json(const SimplifyStatus &s) {
    Json out;
    out["status"] = simplify_kind_name(s.kind);
    out["reduced_support"] = qubit_set_json(s.reduced_support);
    out["pinned"] = qubit_set_json(s.pinned);
    out["ones_mass"] = s.ones_mass;
    return out;
}

Json to_json(const EntanglementLemmaResult &r) {
    Json out;
    out["holds"] = r.holds;
    out["psi_entangled"] = r.psi_entangled;
    out["phi_entangled"] = r.phi_entangled;
    out["simplifies"] = r.simplifies;
    out["simplify"] = to_json(r.simplify);
    out["psi"] = to_json(r.psi);
    out["phi"] = to_json(r.phi);
    out["phi_state"] = state_to_json(r.phi_state);
    return out;
}

Json to_json(const EquationCheck &c) {
    Json out;
    out["hypotheses_ok"] = c.hypotheses_ok;
    out["applicable"] = c.applicable;
    out["conclusion_ok"] = c.conclusion_ok;
    out["consistent"] = c.consistent;
    out["branch"] = c.branch;
    out["max_hypothesis_residual"] = c.max_hypothesis_residual;
    out["hypothesis_residuals"] = list(c.hypothesis_residuals);
    out["conclusion_residuals"] = list(c.conclusion_residuals);
    return out;
}

Json to_json(const TestStringBundle &b) {
    Json out;
    out["case"] = b.case_number;
    out["set"] = qubit_set_json(b.s);
    out["part_a"] = qubit_set_json(b.part_a);
    out["part_b"] = qubit_set_json(b.part_b);
    out["part_c"] = qubit_set_json(b.part_c);
    out["part_d"] = qubit_set_json(b.part_d);
    out["swapped_ab"] = b.swapped_ab;
    out["swapped_cd"] = b.swapped_cd;
    Json quads = Json::array();
    for (QubitSet q : b.quadrant_sets) quads.push_back(qubit_set_json(q));
    out["quadrants"] = quads;
    out["u"] = b.u.str();
    out["y"] = b.y.str();
    out["u_matches_y"] = b.u_matches_y;
    out["y_from_recipe"] = b.y_from_recipe;
    out["y_is_test_string"] = b.y_is_test_string;
    out["y_amplitude"] = complex_to_json(b.y_amplitude);
    out["gluing_identity"] = b.gluing_identity;
    out["x_a"] = strings_json(b.x_a);
    out["x_b"] = strings_json(b.x_b);
    out["x_c"] = strings_json(b.x_c);
    out["x_d"] = strings_json(b.x_d);
    out["a"] = complex_list(b.a);
    out["b"] = complex_list(b.b);
    out["c"] = complex_list(b.c);
    out["d"] = complex_list(b.d);
    out["psi_second_singular_value"] = b.psi_second_singular_value;
    out["phi_second_singular_value"] = b.phi_second_singular_value;
    out["equations"] = equation_values_to_json(b.equations);
    out["equations_check"] = to_json(b.equations_check);
    out["contradiction"] = b.contradiction;
    return out;
}

Json to_json(const KillerStateCertificate &c) {
    Json out;
    out["valid"] = c.valid;
    out["parity_bit"] = c.parity_bit;
    out["null_space_dimension"] = c.null_space_dimension;
    out["residuals"] = list(c.residuals);
    out["parity_leakage"] = c.parity_leakage;
    out["state"] = state_to_json(c.state);
    return out;
}

Json to_json(const Depth2KillerResult &r) {
    Json out;
    out["both_off"] = r.both_off;
    Json qs = Json::array();
    for (int q : r.qubits) qs.push_back(q);
    out["qubits"] = qs;
    out["gate1"] = qubit_set_json(r.gate1);
    out["gate2"] = qubit_set_json(r.gate2);
    out["gate1_residual"] = r.gate1_residual;
    out["gate2_residual"] = r.gate2_residual;
    out["completions_checked"] = r.completions_checked;
    out["certificate"] = to_json(r.certificate);
    return out;
}

Json to_json(const Depth1Refutation &r) {
    Json out;
    out["kind"] = refutation_kind_name(r.kind);
    out["refuted"] = r.refuted;
    out["reason"] = r.reason;
    if (r.kind == RefutationKind::Disconnected) {
        out["disconnected_qubit"] = r.disconnected_qubit;
    }
    if (r.kind == RefutationKind::KillerState) {
        out["gate"] = qubit_set_json(r.gate);
        out["committed"] = Json::array({1, r.q2});
        out["toggled"] = r.q3;
        out["killer"] = to_json(*r.killer);
        out["target_q3_zero"] = matrix2_json(r.target_q3_zero);
        out["target_q3_one"] = matrix2_json(r.target_q3_one);
        out["trace_distance"] = r.trace_distance;
        out["max_completion_trace_distance"] = r.max_completion_trace_distance;
        out["output_q3_zero"] = state_to_json(*r.output_q3_zero);
        out["output_q3_one"] = state_to_json(*r.output_q3_one);
    }
    return out;
}

Json to_json(const SearchReport &r, bool with_timing) {
    Json out;
    out["topology"] = r.topology.str();
    out["n"] = r.topology.n;
    out["m"] = r.topology.m;
    out["seed"] = r.seed;
    out["phase_free"] = r.phase_free;
    out["best_loss"] = r.best_loss;
    out["best_restart"] = r.best_restart;
    out["restart_losses"] = list(r.restart_losses);
    Json iters = Json::array();
    for (int i : r.restart_iterations) iters.push_back(i);
    out["restart_iterations"] = iters;
    out["best_params"] = list(r.best_params);
    if (with_timing) out["wall_seconds"] = r.wall_seconds;
    return out;
}

}  // namespace qaclab
