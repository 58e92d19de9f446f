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

#include "qaclab/qaclab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qaclab/commands.hpp"
#include "qaclab/errors.hpp"

struct qaclab_circuit {
    qaclab::QacCircuit value;
};

struct qaclab_state {
    qaclab::QuantumState value;
};

struct qaclab_report {
    qaclab::Report value;
};

namespace {

std::string &last_error() {
    thread_local std::string message;
    return message;
}

qaclab_status fail(qaclab_status status, const char *what) {
    try {
        last_error() = what;
    } catch (...) {
    }
    return status;
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *p, const char *name) {
    if (!p) throw qaclab::InvalidArgument(std::string(name) + " must not be NULL");
}

qaclab::CommandOptions to_options(const qaclab_options *o) {
    qaclab::CommandOptions out;
    if (!o) return out;
    out.tol = o->tol;
    out.seed = o->seed;
    out.phase_free = o->phase_free != 0;
    out.restarts = o->restarts;
    out.budget_iters = o->budget_iters;
    out.timing = o->timing != 0;
    out.threads = o->threads;
    out.force = o->force != 0;
    return out;
}

qaclab::Complex eta_of(const char *eta) {
    return eta ? qaclab::parse_complex(eta) : qaclab::Complex(-1.0, 0.0);
}

qaclab::QubitSet set_of(const char *text, const char *name) {
    require(text, name);
    return qaclab::parse_qubit_set(text);
}

qaclab_status emit(qaclab::Report r, qaclab_report **out) {
    *out = new qaclab_report{std::move(r)};
    return QACLAB_OK;
}

}  // namespace

#define QACLAB_API_PROLOGUE \
    last_error().clear();   \
    try {
#define QACLAB_API_EPILOGUE                                                                              \
    }                                                                                                    \
    catch (const qaclab::ValidationError &e) {                                                           \
        return fail(QACLAB_ERR_VALIDATION, e.what());                                                    \
    }                                                                                                    \
    catch (const qaclab::ParseError &e) {                                                                \
        return fail(QACLAB_ERR_PARSE, e.what());                                                         \
    }                                                                                                    \
    catch (const qaclab::PreconditionError &e) {                                                         \
        return fail(QACLAB_ERR_PRECONDITION, e.what());                                                  \
    }                                                                                                    \
    catch (const qaclab::InvalidArgument &e) {                                                           \
        return fail(QACLAB_ERR_INVALID_ARGUMENT, e.what());                                              \
    }                                                                                                    \
    catch (const std::bad_alloc &) {                                                                     \
        return fail(QACLAB_ERR_INTERNAL, "out of memory");                                               \
    }                                                                                                    \
    catch (const std::exception &e) {                                                                    \
        return fail(QACLAB_ERR_INTERNAL, e.what());                                                      \
    }                                                                                                    \
    catch (...) {                                                                                        \
        return fail(QACLAB_ERR_INTERNAL, "unknown error");                                               \
    }

extern "C" {

const char *qaclab_version(void) {
    return "0.1.0";
}

const char *qaclab_last_error(void) {
    return last_error().c_str();
}

const char *qaclab_status_name(qaclab_status status) {
    switch (status) {
        case QACLAB_OK:
            return "ok";
        case QACLAB_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QACLAB_ERR_PARSE:
            return "parse error";
        case QACLAB_ERR_VALIDATION:
            return "validation error";
        case QACLAB_ERR_PRECONDITION:
            return "precondition failed";
        case QACLAB_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void qaclab_string_free(char *s) {
    std::free(s);
}

void qaclab_options_init(qaclab_options *o) {
    if (!o) return;
    qaclab::CommandOptions d;
    o->tol = d.tol;
    o->seed = d.seed;
    o->phase_free = 0;
    o->restarts = d.restarts;
    o->budget_iters = d.budget_iters;
    o->timing = 0;
    o->threads = 0;
    o->force = 0;
}

qaclab_status qaclab_circuit_parse(const char *json, qaclab_circuit **out) {
    QACLAB_API_PROLOGUE
    require(json, "json");
    require(out, "out");
    *out = new qaclab_circuit{qaclab::parse_circuit(json)};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_circuit_to_json(const qaclab_circuit *c, char **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    *out = copy_string(qaclab::dump_canonical(qaclab::circuit_to_json(c->value)));
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

void qaclab_circuit_free(qaclab_circuit *c) {
    delete c;
}

int qaclab_circuit_qubits(const qaclab_circuit *c) {
    return c ? c->value.qubits() : -1;
}

int qaclab_circuit_inputs(const qaclab_circuit *c) {
    return c ? c->value.inputs() : -1;
}

int qaclab_circuit_depth(const qaclab_circuit *c) {
    return c ? c->value.depth() : -1;
}

qaclab_status qaclab_circuit_invert(const qaclab_circuit *c, qaclab_circuit **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    *out = new qaclab_circuit{qaclab::invert_circuit(c->value)};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_state_parse(const char *json, qaclab_state **out) {
    QACLAB_API_PROLOGUE
    require(json, "json");
    require(out, "out");
    *out = new qaclab_state{qaclab::parse_state(json)};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_state_basis(const char *bits, qaclab_state **out) {
    QACLAB_API_PROLOGUE
    require(bits, "bits");
    require(out, "out");
    *out = new qaclab_state{qaclab::QuantumState::basis(std::string(bits))};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_state_from_amplitudes(int qubits, const double *re_im, qaclab_state **out) {
    QACLAB_API_PROLOGUE
    require(re_im, "re_im");
    require(out, "out");
    if (qubits < 1 || qubits > qaclab::kMaxStateQubits) {
        throw qaclab::InvalidArgument("qubit count out of range");
    }
    const size_t dim = size_t{1} << qubits;
    qaclab::ComplexVector v(static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) v[static_cast<Eigen::Index>(i)] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = new qaclab_state{qaclab::QuantumState(qubits, std::move(v))};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

int qaclab_state_qubits(const qaclab_state *s) {
    return s ? s->value.qubits() : -1;
}

qaclab_status qaclab_state_amplitudes(const qaclab_state *s, double *re_im, size_t len) {
    QACLAB_API_PROLOGUE
    require(s, "state");
    require(re_im, "re_im");
    const size_t dim = static_cast<size_t>(s->value.dim());
    if (len < 2 * dim) {
        throw qaclab::InvalidArgument("buffer holds " + std::to_string(len) + " doubles, need " +
                                      std::to_string(2 * dim));
    }
    for (size_t i = 0; i < dim; i++) {
        re_im[2 * i] = s->value.amplitude(i).real();
        re_im[2 * i + 1] = s->value.amplitude(i).imag();
    }
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_state_to_json(const qaclab_state *s, char **out) {
    QACLAB_API_PROLOGUE
    require(s, "state");
    require(out, "out");
    *out = copy_string(qaclab::dump_canonical(qaclab::state_to_json(s->value)));
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

void qaclab_state_free(qaclab_state *s) {
    delete s;
}

qaclab_status qaclab_circuit_apply(const qaclab_circuit *c, const qaclab_state *in, qaclab_state **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(in, "input state");
    require(out, "out");
    *out = new qaclab_state{qaclab::apply_circuit(c->value, in->value)};
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_simulate(const qaclab_circuit *c, const qaclab_state *input, const qaclab_options *options,
                              qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(input, "input state");
    require(out, "out");
    return emit(qaclab::commands::simulate(c->value, input->value, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_check_clean(const qaclab_circuit *c, qaclab_target target, const char *unitary_json,
                                 const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    qaclab::CleanTarget t;
    switch (target) {
        case QACLAB_TARGET_PARITY:
            t.kind = qaclab::TargetKind::Parity;
            break;
        case QACLAB_TARGET_FANOUT:
            t.kind = qaclab::TargetKind::Fanout;
            break;
        case QACLAB_TARGET_TOFFOLI:
            t.kind = qaclab::TargetKind::Toffoli;
            break;
        case QACLAB_TARGET_UNITARY:
            require(unitary_json, "unitary_json");
            t.kind = qaclab::TargetKind::Unitary;
            t.unitary = qaclab::matrix_from_json(qaclab::parse_json_text(unitary_json, "unitary"), "unitary");
            break;
        default:
            throw qaclab::InvalidArgument("unknown target kind");
    }
    return emit(qaclab::commands::check_clean(c->value, t, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_check_weak(const qaclab_circuit *c, const qaclab_state *ancilla, const qaclab_options *options,
                                qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    std::optional<qaclab::QuantumState> anc;
    if (ancilla) anc = ancilla->value;
    return emit(qaclab::commands::check_weak(c->value, anc, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_separability(const qaclab_state *s, const char *set, const qaclab_options *options,
                                  qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(s, "state");
    require(out, "out");
    return emit(qaclab::commands::separability(s->value, set_of(set, "set"), to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_simplify(const qaclab_state *s, const char *set, const char *eta, const qaclab_options *options,
                              qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(s, "state");
    require(out, "out");
    return emit(qaclab::commands::simplify(s->value, set_of(set, "set"), eta_of(eta), to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_lemma_entanglement(const qaclab_state *s, const char *set, const char *eta,
                                        const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(s, "state");
    require(out, "out");
    return emit(
        qaclab::commands::lemma_entanglement(s->value, set_of(set, "set"), eta_of(eta), to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_test_string_witness(const qaclab_state *psi, const qaclab_state *phi, const char *set,
                                         const char *part_a, const char *part_c, const char *eta, int refutation,
                                         const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(psi, "psi");
    require(out, "out");
    std::optional<qaclab::QuantumState> p;
    if (phi) p = phi->value;
    auto mode = refutation ? qaclab::WitnessMode::Refutation : qaclab::WitnessMode::Strict;
    return emit(qaclab::commands::test_string_witness(psi->value, p, set_of(set, "set"), set_of(part_a, "part_a"),
                                                      set_of(part_c, "part_c"), eta_of(eta), mode,
                                                      to_options(options)),
                out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_kill_parity(const char *unitaries_json, int parity_bit, const qaclab_options *options,
                                 qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(unitaries_json, "unitaries_json");
    require(out, "out");
    int n = 0;
    auto us = qaclab::parse_unitaries(unitaries_json, n);
    return emit(qaclab::commands::kill_parity(n, us, parity_bit, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_kill_parity_random(int qubits, int count, int parity_bit, const qaclab_options *options,
                                        qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(out, "out");
    return emit(qaclab::commands::kill_parity_random(qubits, count, parity_bit, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_kill_parity_depth2(const qaclab_circuit *c, int q1, int q2, int q3, int parity_bit,
                                        const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    return emit(qaclab::commands::kill_parity_depth2(c->value, q1, q2, q3, parity_bit, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_refute_depth1(const qaclab_circuit *c, const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(c, "circuit");
    require(out, "out");
    return emit(qaclab::commands::refute_depth1(c->value, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_appendix_b_check(const char *values_json, const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(values_json, "values_json");
    require(out, "out");
    return emit(qaclab::commands::appendix_b_check(qaclab::parse_equation_values(values_json), to_options(options)),
                out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_appendix_b_generate(const char *kind, const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(kind, "kind");
    require(out, "out");
    return emit(qaclab::commands::appendix_b_generate(qaclab::parse_equation_case(kind), to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_search_depth2(const char *topology, int n, int m, const qaclab_options *options,
                                   qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(topology, "topology");
    require(out, "out");
    return emit(qaclab::commands::search_depth2(qaclab::parse_topology(topology, n, m), to_options(options)), out);
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_sweep(int n, int m_max, const qaclab_options *options, qaclab_report **out) {
    QACLAB_API_PROLOGUE
    require(out, "out");
    return emit(qaclab::commands::sweep(n, m_max, to_options(options)), out);
    QACLAB_API_EPILOGUE
}

int qaclab_report_exit_code(const qaclab_report *r) {
    return r ? r->value.exit_code : 2;
}

const char *qaclab_report_verdict(const qaclab_report *r) {
    return r ? r->value.verdict.c_str() : "";
}

qaclab_status qaclab_report_json(const qaclab_report *r, char **out) {
    QACLAB_API_PROLOGUE
    require(r, "report");
    require(out, "out");
    *out = copy_string(qaclab::dump_canonical(r->value.to_json()));
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

qaclab_status qaclab_report_summary(const qaclab_report *r, char **out) {
    QACLAB_API_PROLOGUE
    require(r, "report");
    require(out, "out");
    *out = copy_string(r->value.summary);
    return QACLAB_OK;
    QACLAB_API_EPILOGUE
}

void qaclab_report_free(qaclab_report *r) {
    delete r;
}

}  // extern "C"
