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

// C interface to the qaclab state-vector library.
//
// Objects are opaque handles released with the matching *_free function.
// Every fallible call returns a qaclab_status; on failure the message is
// available from qaclab_last_error() on the same thread. Strings returned
// through char** out-parameters are released with qaclab_string_free.

#ifndef QACLAB_QACLAB_H
#define QACLAB_QACLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(QACLAB_BUILDING_LIBRARY)
#define QACLAB_API __attribute__((visibility("default")))
#else
#define QACLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qaclab_status {
    QACLAB_OK = 0,
    QACLAB_ERR_INVALID_ARGUMENT = 1,
    QACLAB_ERR_PARSE = 2,
    QACLAB_ERR_VALIDATION = 3,
    QACLAB_ERR_PRECONDITION = 4,
    QACLAB_ERR_INTERNAL = 5,
} qaclab_status;

typedef struct qaclab_circuit qaclab_circuit;
typedef struct qaclab_state qaclab_state;
typedef struct qaclab_report qaclab_report;

typedef struct qaclab_options {
    double tol;
    uint64_t seed;
    int phase_free;
    int restarts;
    int budget_iters;
    // Include wall-clock timing in reports (makes them non-reproducible).
    int timing;
    // 0 uses THREADS from the environment or the hardware concurrency.
    int threads;
    // Allow sweeps over more than 10^4 topologies.
    int force;
} qaclab_options;

typedef enum qaclab_target {
    QACLAB_TARGET_PARITY = 0,
    QACLAB_TARGET_FANOUT = 1,
    QACLAB_TARGET_TOFFOLI = 2,
    QACLAB_TARGET_UNITARY = 3,
} qaclab_target;

QACLAB_API const char *qaclab_version(void);
// Message of the last failed call on this thread, or "" if none.
QACLAB_API const char *qaclab_last_error(void);
QACLAB_API const char *qaclab_status_name(qaclab_status status);
QACLAB_API void qaclab_string_free(char *s);
// tol 1e-9, seed 0, 20 restarts, 400 iterations, everything else off.
QACLAB_API void qaclab_options_init(qaclab_options *options);

// Circuits (JSON circuit format).
QACLAB_API qaclab_status qaclab_circuit_parse(const char *json, qaclab_circuit **out);
QACLAB_API qaclab_status qaclab_circuit_to_json(const qaclab_circuit *c, char **out);
QACLAB_API void qaclab_circuit_free(qaclab_circuit *c);
QACLAB_API int qaclab_circuit_qubits(const qaclab_circuit *c);
QACLAB_API int qaclab_circuit_inputs(const qaclab_circuit *c);
QACLAB_API int qaclab_circuit_depth(const qaclab_circuit *c);
QACLAB_API qaclab_status qaclab_circuit_invert(const qaclab_circuit *c, qaclab_circuit **out);

// States. Amplitudes are interleaved (re, im) pairs, qubit 1 most significant.
QACLAB_API qaclab_status qaclab_state_parse(const char *json, qaclab_state **out);
QACLAB_API qaclab_status qaclab_state_basis(const char *bits, qaclab_state **out);
QACLAB_API qaclab_status qaclab_state_from_amplitudes(int qubits, const double *re_im, qaclab_state **out);
QACLAB_API int qaclab_state_qubits(const qaclab_state *s);
// Writes 2 * 2^qubits doubles; len is the capacity of re_im in doubles.
QACLAB_API qaclab_status qaclab_state_amplitudes(const qaclab_state *s, double *re_im, size_t len);
QACLAB_API qaclab_status qaclab_state_to_json(const qaclab_state *s, char **out);
QACLAB_API void qaclab_state_free(qaclab_state *s);
QACLAB_API qaclab_status qaclab_circuit_apply(const qaclab_circuit *c, const qaclab_state *in, qaclab_state **out);

// Commands. Each produces a report; qubit sets are written "1,2,3" or
// "{1,2,3}", phases eta as "-1", "i", "re,im" or "phase:<radians>" (NULL
// means -1).
QACLAB_API qaclab_status qaclab_simulate(const qaclab_circuit *c, const qaclab_state *input,
                                         const qaclab_options *options, qaclab_report **out);
// unitary_json is a matrix (rows of [re, im]) and only used with QACLAB_TARGET_UNITARY.
QACLAB_API qaclab_status qaclab_check_clean(const qaclab_circuit *c, qaclab_target target, const char *unitary_json,
                                            const qaclab_options *options, qaclab_report **out);
// ancilla may be NULL for |0...0>.
QACLAB_API qaclab_status qaclab_check_weak(const qaclab_circuit *c, const qaclab_state *ancilla,
                                           const qaclab_options *options, qaclab_report **out);
QACLAB_API qaclab_status qaclab_separability(const qaclab_state *s, const char *set, const qaclab_options *options,
                                             qaclab_report **out);
QACLAB_API qaclab_status qaclab_simplify(const qaclab_state *s, const char *set, const char *eta,
                                         const qaclab_options *options, qaclab_report **out);
QACLAB_API qaclab_status qaclab_lemma_entanglement(const qaclab_state *s, const char *set, const char *eta,
                                                   const qaclab_options *options, qaclab_report **out);
// phi may be NULL for G_eta(set) psi. With refutation != 0 the (C, D)
// product structure of phi is hypothetical.
QACLAB_API qaclab_status qaclab_test_string_witness(const qaclab_state *psi, const qaclab_state *phi, const char *set,
                                                    const char *part_a, const char *part_c, const char *eta,
                                                    int refutation, const qaclab_options *options,
                                                    qaclab_report **out);
// {"qubits": n, "unitaries": [matrix, ...]}
QACLAB_API qaclab_status qaclab_kill_parity(const char *unitaries_json, int parity_bit, const qaclab_options *options,
                                            qaclab_report **out);
QACLAB_API qaclab_status qaclab_kill_parity_random(int qubits, int count, int parity_bit,
                                                   const qaclab_options *options, qaclab_report **out);
QACLAB_API qaclab_status qaclab_kill_parity_depth2(const qaclab_circuit *c, int q1, int q2, int q3, int parity_bit,
                                                   const qaclab_options *options, qaclab_report **out);
QACLAB_API qaclab_status qaclab_refute_depth1(const qaclab_circuit *c, const qaclab_options *options,
                                              qaclab_report **out);
QACLAB_API qaclab_status qaclab_appendix_b_check(const char *values_json, const qaclab_options *options,
                                                 qaclab_report **out);
// kind is "4sets", "3sets" or "2sets"; the instance is drawn from options->seed.
QACLAB_API qaclab_status qaclab_appendix_b_generate(const char *kind, const qaclab_options *options,
                                                    qaclab_report **out);
// topology is "{1,2,3}/{1,2,3}" (layers split by '/', gates by spaces) or a
// JSON object {"n", "m", "layers"}; n and m are ignored for JSON.
QACLAB_API qaclab_status qaclab_search_depth2(const char *topology, int n, int m, const qaclab_options *options,
                                              qaclab_report **out);
QACLAB_API qaclab_status qaclab_sweep(int n, int m_max, const qaclab_options *options, qaclab_report **out);

// 0 verified or completed, 1 refuted.
QACLAB_API int qaclab_report_exit_code(const qaclab_report *r);
// Borrowed; valid until the report is freed.
QACLAB_API const char *qaclab_report_verdict(const qaclab_report *r);
QACLAB_API qaclab_status qaclab_report_json(const qaclab_report *r, char **out);
QACLAB_API qaclab_status qaclab_report_summary(const qaclab_report *r, char **out);
QACLAB_API void qaclab_report_free(qaclab_report *r);

#ifdef __cplusplus
}
#endif

#endif
