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

#include "qaclab/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qaclab/errors.hpp"

namespace qaclab {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s = buf;
    // Keep floats recognizable as floats.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

bool is_flat(const Json &j) {
    for (const auto &e : j) {
        if (e.is_object()) return false;
        if (e.is_array()) {
            for (const auto &f : e) {
                if (f.is_structured()) return false;
            }
        }
    }
    return true;
}

void write(std::string &out, const Json &j, int indent, bool inline_mode) {
    auto newline = [&](int level) {
        if (inline_mode) return;
        out += '\n';
        out.append(static_cast<size_t>(2 * level), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += inline_mode ? ", " : ",";
                first = false;
                newline(indent + 1);
                out += Json(it.key()).dump();
                out += ": ";
                write(out, it.value(), indent + 1, inline_mode);
            }
            newline(indent);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool flat = inline_mode || is_flat(j);
            out += '[';
            bool first = true;
            for (const auto &e : j) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(indent + 1);
                write(out, e, indent + 1, flat);
            }
            if (!flat) newline(indent);
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

[[noreturn]] void fail(const std::string &path, const std::string &msg) {
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + msg);
}

const Json &field(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

std::string join(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string &path, size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

int as_int(const Json &j, const std::string &path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

double as_double(const Json &j, const std::string &path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

const Json &as_array(const Json &j, const std::string &path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

Complex as_complex(const Json &j, const std::string &path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) fail(path, "expected a complex number [re, im]");
    return {as_double(j[0], at(path, 0)), as_double(j[1], at(path, 1))};
}

std::vector<Complex> as_complex_list(const Json &j, const std::string &path) {
    std::vector<Complex> out;
    const Json &arr = as_array(j, path);
    for (size_t i = 0; i < arr.size(); i++) out.push_back(as_complex(arr[i], at(path, i)));
    return out;
}

QubitSet as_qubit_set(const Json &j, const std::string &path) {
    std::vector<int> labels;
    const Json &arr = as_array(j, path);
    for (size_t i = 0; i < arr.size(); i++) {
        int q = as_int(arr[i], at(path, i));
        if (q < 1 || q > kMaxQubitLabel) fail(at(path, i), "qubit label out of range");
        labels.push_back(q);
    }
    QubitSet s(labels);
    if (s.size() != static_cast<int>(labels.size())) fail(path, "repeated qubit label");
    return s;
}

Json qubit_set_to_json(QubitSet s) {
    Json out = Json::array();
    for (int q : s.labels()) out.push_back(q);
    return out;
}

SingleLayer single_from_json(const Json &gates, const std::string &path) {
    SingleLayer layer;
    const Json &arr = as_array(gates, path);
    for (size_t i = 0; i < arr.size(); i++) {
        const std::string gp = at(path, i);
        const Json &g = arr[i];
        int q = as_int(field(g, "q", gp), join(gp, "q"));
        if (q < 1 || q > kMaxQubitLabel) fail(join(gp, "q"), "qubit label out of range");
        if (layer.gates.count(q)) fail(gp, "second gate on qubit " + std::to_string(q));
        bool has_matrix = g.contains("matrix");
        bool has_zyz = g.contains("zyz");
        if (has_matrix == has_zyz) fail(gp, "expected exactly one of 'matrix' or 'zyz'");
        if (has_matrix) {
            auto entries = as_complex_list(g["matrix"], join(gp, "matrix"));
            if (entries.size() != 4) fail(join(gp, "matrix"), "expected 4 entries [[re, im] x 4]");
            Matrix2c m;
            m << entries[0], entries[1], entries[2], entries[3];
            layer.gates[q] = SingleQubitGate::from_matrix(m);
        } else {
            const Json &p = as_array(g["zyz"], join(gp, "zyz"));
            if (p.size() != 4) fail(join(gp, "zyz"), "expected [beta, theta, phi, lambda]");
            std::array<double, 4> v{};
            for (size_t t = 0; t < 4; t++) v[t] = as_double(p[t], at(join(gp, "zyz"), t));
            layer.gates[q] = SingleQubitGate::from_zyz(v);
        }
    }
    return layer;
}

MultiLayer multi_from_json(const Json &csign, const std::string &path) {
    MultiLayer layer;
    const Json &arr = as_array(csign, path);
    for (size_t i = 0; i < arr.size(); i++) layer.csign.push_back(as_qubit_set(arr[i], at(path, i)));
    return layer;
}

std::pair<size_t, size_t> line_column(const std::string &text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return {line, col};
}

}  // namespace

std::string dump_canonical(const Json &j) {
    std::string out;
    write(out, j, 0, false);
    out += '\n';
    return out;
}

Json parse_json_text(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(what + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         (pos == std::string::npos ? msg : msg.substr(pos)));
    }
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

QacCircuit circuit_from_json(const Json &j) {
    if (!j.is_object()) fail("", "expected a circuit object");
    int qubits = as_int(field(j, "qubits", ""), "qubits");
    int inputs = as_int(field(j, "inputs", ""), "inputs");
    const Json &layers = as_array(field(j, "layers", ""), "layers");
    std::vector<Layer> parsed;
    for (size_t i = 0; i < layers.size(); i++) {
        const std::string lp = at("layers", i);
        const Json &l = layers[i];
        if (!l.is_object()) fail(lp, "expected a layer object");
        if (l.contains("kind")) {
            const Json &kind = l["kind"];
            if (kind == "single") {
                parsed.emplace_back(single_from_json(field(l, "gates", lp), join(lp, "gates")));
            } else if (kind == "multi") {
                parsed.emplace_back(multi_from_json(field(l, "csign", lp), join(lp, "csign")));
            } else {
                fail(join(lp, "kind"), "expected \"single\" or \"multi\"");
            }
        } else if (l.contains("single")) {
            parsed.emplace_back(single_from_json(l["single"], join(lp, "single")));
        } else if (l.contains("multi")) {
            parsed.emplace_back(multi_from_json(l["multi"], join(lp, "multi")));
        } else {
            fail(lp, "expected 'kind', 'single' or 'multi'");
        }
    }
    QacCircuit c = QacCircuit::canonicalize(qubits, inputs, std::move(parsed));
    require_valid(c);
    return c;
}

QacCircuit parse_circuit(const std::string &text) {
    return circuit_from_json(parse_json_text(text, "circuit"));
}

Json circuit_to_json(const QacCircuit &c) {
    Json layers = Json::array();
    for (const Layer &layer : c.layers()) {
        if (const auto *s = std::get_if<SingleLayer>(&layer)) {
            Json gates = Json::array();
            for (const auto &[q, g] : s->gates) {
                Json entry;
                entry["q"] = q;
                if (g.zyz) {
                    entry["zyz"] = Json::array({(*g.zyz)[0], (*g.zyz)[1], (*g.zyz)[2], (*g.zyz)[3]});
                } else {
                    entry["matrix"] = Json::array({complex_to_json(g.matrix(0, 0)), complex_to_json(g.matrix(0, 1)),
                                                   complex_to_json(g.matrix(1, 0)), complex_to_json(g.matrix(1, 1))});
                }
                gates.push_back(entry);
            }
            layers.push_back(Json{{"kind", "single"}, {"gates", gates}});
        } else {
            Json csign = Json::array();
            for (QubitSet g : std::get<MultiLayer>(layer).csign) csign.push_back(qubit_set_to_json(g));
            layers.push_back(Json{{"kind", "multi"}, {"csign", csign}});
        }
    }
    Json out;
    out["qubits"] = c.qubits();
    out["inputs"] = c.inputs();
    out["layers"] = layers;
    return out;
}

QuantumState state_from_json(const Json &j, const std::string &path) {
    if (!j.is_object()) fail(path, "expected a state object");
    if (j.contains("basis")) {
        const Json &b = j["basis"];
        if (!b.is_string()) fail(join(path, "basis"), "expected a bit string such as \"010\"");
        try {
            return QuantumState::basis(b.get<std::string>());
        } catch (const std::exception &e) {
            fail(join(path, "basis"), e.what());
        }
    }
    int n = as_int(field(j, "qubits", path), join(path, "qubits"));
    auto amps = as_complex_list(field(j, "amplitudes", path), join(path, "amplitudes"));
    if (n < 1 || n > kMaxStateQubits) fail(join(path, "qubits"), "out of range");
    if (amps.size() != (size_t{1} << n)) {
        fail(join(path, "amplitudes"), "expected " + std::to_string(size_t{1} << n) + " entries, got " +
                                           std::to_string(amps.size()));
    }
    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    for (size_t i = 0; i < amps.size(); i++) v[static_cast<Eigen::Index>(i)] = amps[i];
    return QuantumState(n, v);
}

QuantumState parse_state(const std::string &text) {
    return state_from_json(parse_json_text(text, "state"));
}

Json state_to_json(const QuantumState &s) {
    Json amps = Json::array();
    for (uint64_t i = 0; i < s.dim(); i++) amps.push_back(complex_to_json(s.amplitude(i)));
    Json out;
    out["qubits"] = s.qubits();
    out["amplitudes"] = amps;
    return out;
}

Topology topology_from_json(const Json &j) {
    Topology t;
    t.n = as_int(field(j, "n", ""), "n");
    t.m = as_int(field(j, "m", ""), "m");
    const Json &layers = as_array(field(j, "layers", ""), "layers");
    for (size_t i = 0; i < layers.size(); i++) t.layers.push_back(multi_from_json(layers[i], at("layers", i)));
    t.validate();
    return t;
}

Json topology_to_json(const Topology &t) {
    Json layers = Json::array();
    for (const auto &l : t.layers) {
        Json gates = Json::array();
        for (QubitSet g : l.csign) gates.push_back(qubit_set_to_json(g));
        layers.push_back(gates);
    }
    Json out;
    out["n"] = t.n;
    out["m"] = t.m;
    out["layers"] = layers;
    return out;
}

Topology parse_topology(const std::string &text, int n, int m) {
    if (text.find('"') != std::string::npos) {
        return topology_from_json(parse_json_text(text, "topology"));
    }
    Topology t;
    t.n = n;
    t.m = m;
    std::string layer_text;
    std::istringstream layers(text);
    while (std::getline(layers, layer_text, '/')) {
        MultiLayer layer;
        size_t pos = 0;
        while ((pos = layer_text.find('{', pos)) != std::string::npos) {
            size_t close = layer_text.find('}', pos);
            if (close == std::string::npos) {
                throw ParseError("topology: unbalanced '{' in \"" + layer_text + "\"");
            }
            layer.csign.push_back(parse_qubit_set(layer_text.substr(pos, close - pos + 1)));
            pos = close + 1;
        }
        t.layers.push_back(std::move(layer));
    }
    t.validate();
    return t;
}

EquationValues equation_values_from_json(const Json &j) {
    EquationValues v;
    const Json &kind = field(j, "case", "");
    if (!kind.is_string()) fail("case", "expected \"4sets\", \"3sets\" or \"2sets\"");
    try {
        v.kind = parse_equation_case(kind.get<std::string>());
    } catch (const InvalidArgument &e) {
        fail("case", e.what());
    }
    v.eta = as_complex(field(j, "eta", ""), "eta");
    v.a = as_complex_list(field(j, "a", ""), "a");
    v.b = as_complex_list(field(j, "b", ""), "b");
    v.c = as_complex_list(field(j, "c", ""), "c");
    v.d = as_complex_list(field(j, "d", ""), "d");
    v.validate();
    return v;
}

EquationValues parse_equation_values(const std::string &text) {
    return equation_values_from_json(parse_json_text(text, "values"));
}

Json equation_values_to_json(const EquationValues &v) {
    auto list = [](const std::vector<Complex> &xs) {
        Json out = Json::array();
        for (Complex z : xs) out.push_back(complex_to_json(z));
        return out;
    };
    Json out;
    out["case"] = equation_case_name(v.kind);
    out["eta"] = complex_to_json(v.eta);
    out["a"] = list(v.a);
    out["b"] = list(v.b);
    out["c"] = list(v.c);
    out["d"] = list(v.d);
    return out;
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &path) {
    const Json &rows = as_array(j, path);
    if (rows.empty()) fail(path, "empty matrix");
    const size_t cols = as_array(rows[0], at(path, 0)).size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < rows.size(); r++) {
        auto row = as_complex_list(rows[r], at(path, r));
        if (row.size() != cols) fail(at(path, r), "ragged matrix row");
        for (size_t c = 0; c < cols; c++) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    }
    return m;
}

std::vector<ComplexMatrix> parse_unitaries(const std::string &text, int &qubits) {
    Json j = parse_json_text(text, "unitaries");
    qubits = as_int(field(j, "qubits", ""), "qubits");
    const Json &list = as_array(field(j, "unitaries", ""), "unitaries");
    std::vector<ComplexMatrix> out;
    for (size_t i = 0; i < list.size(); i++) out.push_back(matrix_from_json(list[i], at("unitaries", i)));
    return out;
}

QubitSet parse_qubit_set(const std::string &text) {
    std::string t;
    for (char ch : text) {
        if (ch == '{' || ch == '}' || ch == '[' || ch == ']') continue;
        t += ch == ',' ? ' ' : ch;
    }
    std::istringstream in(t);
    std::vector<int> labels;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int q = 0;
        try {
            q = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size() || q < 1 || q > kMaxQubitLabel) {
            throw InvalidArgument("bad qubit label '" + tok + "' in set '" + text + "'");
        }
        labels.push_back(q);
    }
    QubitSet s(labels);
    if (s.size() != static_cast<int>(labels.size())) {
        throw InvalidArgument("repeated qubit label in set '" + text + "'");
    }
    return s;
}

Complex parse_complex(const std::string &text) {
    auto number = [&](const std::string &tok) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw InvalidArgument("bad complex number '" + text + "'");
        return v;
    };
    if (text == "i") return {0.0, 1.0};
    if (text == "-i") return {0.0, -1.0};
    if (text.rfind("phase:", 0) == 0) return std::polar(1.0, number(text.substr(6)));
    auto comma = text.find(',');
    if (comma != std::string::npos) return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
    return {number(text), 0.0};
}

}  // namespace qaclab
