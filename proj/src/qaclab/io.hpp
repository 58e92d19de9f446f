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

#ifndef QACLAB_IO_HPP
#define QACLAB_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qaclab/phase_equations.hpp"
#include "qaclab/search.hpp"

namespace qaclab {

using Json = nlohmann::ordered_json;

/// Deterministic JSON text: keys in insertion order, floats with 17
/// significant digits, 2-space indentation with scalar arrays kept on one
/// line, trailing newline.
std::string dump_canonical(const Json &j);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(const std::string &text, const std::string &what);

Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix &m);

/// {"qubits": m, "inputs": n, "layers": [...]} with
/// {"kind": "single", "gates": [{"q": 1, "matrix": [[re, im] x 4]} | {"q": 1, "zyz": [b, t, p, l]}]}
/// and {"kind": "multi", "csign": [[1, 2], ...]}. The shorthands
/// {"single": [...]} and {"multi": [...]} are accepted. Identity single
/// layers are inserted so the result alternates; the circuit is validated.
QacCircuit parse_circuit(const std::string &text);
QacCircuit circuit_from_json(const Json &j);
Json circuit_to_json(const QacCircuit &c);

/// {"qubits": n, "amplitudes": [[re, im], ...]} or {"basis": "0110"}.
QuantumState parse_state(const std::string &text);
QuantumState state_from_json(const Json &j, const std::string &path = "");
Json state_to_json(const QuantumState &s);

/// {"n": 3, "m": 3, "layers": [[[1,2,3]], [[1,2,3]]]}
Topology topology_from_json(const Json &j);
Json topology_to_json(const Topology &t);
/// JSON as above, or the descriptor form "{1,2,3} {4,5}/{1,2}" with layers
/// split by '/' (n and m are then required).
Topology parse_topology(const std::string &text, int n, int m);

/// {"case": "2sets", "eta": [re, im], "a": [[re, im], ...], "b": ..., "c": ..., "d": ...}
EquationValues parse_equation_values(const std::string &text);
EquationValues equation_values_from_json(const Json &j);
Json equation_values_to_json(const EquationValues &v);

/// {"qubits": n, "unitaries": [matrix, ...]} where a matrix is a list of rows
/// of [re, im] entries.
std::vector<ComplexMatrix> parse_unitaries(const std::string &text, int &qubits);
ComplexMatrix matrix_from_json(const Json &j, const std::string &path);

/// Parses "{1,2,3}", "1,2,3" or "[1,2,3]" into a set of labels.
QubitSet parse_qubit_set(const std::string &text);

/// "-1", "i", "-i", "0.5,0.866" (re,im) or "phase:1.0472" (unit modulus, radians).
Complex parse_complex(const std::string &text);

}  // namespace qaclab

#endif
