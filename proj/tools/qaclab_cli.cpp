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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaclab/qaclab.h"

namespace {

constexpr int kExitUsage = 2;

struct Failure {
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{"cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check(qaclab_status status) {
    if (status != QACLAB_OK) {
        throw Failure{std::string(qaclab_status_name(status)) + ": " + qaclab_last_error()};
    }
}

struct CircuitDeleter {
    void operator()(qaclab_circuit *c) const {
        qaclab_circuit_free(c);
    }
};
struct StateDeleter {
    void operator()(qaclab_state *s) const {
        qaclab_state_free(s);
    }
};
struct ReportDeleter {
    void operator()(qaclab_report *r) const {
        qaclab_report_free(r);
    }
};
using CircuitPtr = std::unique_ptr<qaclab_circuit, CircuitDeleter>;
using StatePtr = std::unique_ptr<qaclab_state, StateDeleter>;
using ReportPtr = std::unique_ptr<qaclab_report, ReportDeleter>;

std::string take_string(char *s) {
    std::string out(s);
    qaclab_string_free(s);
    return out;
}

CircuitPtr load_circuit(const std::string &path) {
    qaclab_circuit *c = nullptr;
    check(qaclab_circuit_parse(read_file(path).c_str(), &c));
    return CircuitPtr(c);
}

StatePtr load_state(const std::string &path) {
    qaclab_state *s = nullptr;
    check(qaclab_state_parse(read_file(path).c_str(), &s));
    return StatePtr(s);
}

struct Globals {
    double tol = 1e-9;
    uint64_t seed = 0;
    bool json = false;
    bool phase_free = false;
    int restarts = 20;
    int budget_iters = 400;
    bool timing = false;
    bool force = false;
    int threads = 0;

    qaclab_options options() const {
        qaclab_options o;
        qaclab_options_init(&o);
        o.tol = tol;
        o.seed = seed;
        o.phase_free = phase_free;
        o.restarts = restarts;
        o.budget_iters = budget_iters;
        o.timing = timing;
        o.force = force;
        o.threads = threads;
        return o;
    }
};

int emit(qaclab_report *raw, bool json) {
    ReportPtr r(raw);
    char *text = nullptr;
    if (json) {
        check(qaclab_report_json(r.get(), &text));
    } else {
        check(qaclab_report_summary(r.get(), &text));
    }
    std::string s = take_string(text);
    std::fputs(s.c_str(), stdout);
    if (!s.empty() && s.back() != '\n') std::fputc('\n', stdout);
    std::fflush(stdout);
    return qaclab_report_exit_code(r.get());
}

const char *opt_cstr(const std::string &s) {
    return s.empty() ? nullptr : s.c_str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Tools for constant-depth quantum circuits with C-SIGN gates."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", qaclab_version());

    Globals g;
    app.add_option("--tol", g.tol, "Zero threshold for amplitudes and residuals")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Random seed");
    app.add_flag("--json", g.json, "Print the full JSON report instead of a summary");
    app.add_flag("--phase-free", g.phase_free, "Search: allow a global phase per input");
    app.add_option("--restarts", g.restarts, "Search: random restarts per topology")->check(CLI::PositiveNumber);
    app.add_option("--budget-iters", g.budget_iters, "Search: iteration budget per restart")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "Include wall-clock timing in search reports");
    app.add_flag("--force", g.force, "Sweep: run past the topology limit");

    std::function<int()> action;

    auto *simulate = app.add_subcommand("simulate", "Run a circuit on an input");
    std::string circuit_path, state_path, input_bits;
    simulate->add_option("circuit", circuit_path, "Circuit JSON file")->required();
    auto *sim_state = simulate->add_option("--state", state_path, "Input state JSON file");
    simulate->add_option("--input", input_bits, "Classical input bits; ancillas default to 0")->excludes(sim_state);
    simulate->callback([&] {
        action = [&] {
            auto c = load_circuit(circuit_path);
            StatePtr in;
            if (!state_path.empty()) {
                in = load_state(state_path);
            } else {
                std::string bits = input_bits;
                int m = qaclab_circuit_qubits(c.get());
                if (bits.empty()) bits = std::string(static_cast<size_t>(m), '0');
                if (static_cast<int>(bits.size()) < m) bits.append(static_cast<size_t>(m) - bits.size(), '0');
                qaclab_state *s = nullptr;
                check(qaclab_state_basis(bits.c_str(), &s));
                in.reset(s);
            }
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_simulate(c.get(), in.get(), &o, &r));
            return emit(r, g.json);
        };
    });

    auto *check_clean = app.add_subcommand("check-clean", "Check that a circuit cleanly computes a target");
    std::string target = "parity", unitary_path;
    check_clean->add_option("circuit", circuit_path, "Circuit JSON file")->required();
    check_clean->add_option("--target", target, "parity, fanout, toffoli or unitary")
        ->check(CLI::IsMember({"parity", "fanout", "toffoli", "unitary"}));
    check_clean->add_option("--unitary", unitary_path, "Target matrix JSON file for --target unitary");
    check_clean->callback([&] {
        action = [&] {
            auto c = load_circuit(circuit_path);
            qaclab_target t = QACLAB_TARGET_PARITY;
            std::string unitary;
            if (target == "fanout") t = QACLAB_TARGET_FANOUT;
            if (target == "toffoli") t = QACLAB_TARGET_TOFFOLI;
            if (target == "unitary") {
                if (unitary_path.empty()) throw CLI::RequiredError("--unitary");
                t = QACLAB_TARGET_UNITARY;
                unitary = read_file(unitary_path);
            }
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_check_clean(c.get(), t, opt_cstr(unitary), &o, &r));
            return emit(r, g.json);
        };
    });

    auto *check_weak = app.add_subcommand("check-weak", "Check weak parity computation with a given ancilla state");
    std::string ancilla_path;
    check_weak->add_option("circuit", circuit_path, "Circuit JSON file")->required();
    check_weak->add_option("--ancilla", ancilla_path, "Ancilla state JSON file (omit when there are no ancillas)");
    check_weak->callback([&] {
        action = [&] {
            auto c = load_circuit(circuit_path);
            StatePtr anc;
            if (!ancilla_path.empty()) anc = load_state(ancilla_path);
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_check_weak(c.get(), anc.get(), &o, &r));
            return emit(r, g.json);
        };
    });

    std::string set, eta;
    auto *separability = app.add_subcommand("separability", "Test whether a state is S-separable");
    separability->add_option("state", state_path, "State JSON file")->required();
    separability->add_option("--set", set, "Qubit set S, e.g. {1,2,3}")->required();
    separability->callback([&] {
        action = [&] {
            auto s = load_state(state_path);
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_separability(s.get(), set.c_str(), &o, &r));
            return emit(r, g.json);
        };
    });

    auto *simplify = app.add_subcommand("simplify", "Classify how a C-SIGN gate acts on a state");
    simplify->add_option("state", state_path, "State JSON file")->required();
    simplify->add_option("--set", set, "Gate support S")->required();
    simplify->add_option("--eta", eta, "Gate phase: -1, i, re,im or phase:radians");
    simplify->callback([&] {
        action = [&] {
            auto s = load_state(state_path);
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_simplify(s.get(), set.c_str(), opt_cstr(eta), &o, &r));
            return emit(r, g.json);
        };
    });

    auto *lemma = app.add_subcommand("lemma-entanglement",
                                     "Check the entanglement disjunction, or find a test-string witness");
    std::string part_a, part_c, phi_path;
    bool refutation = false;
    lemma->add_option("state", state_path, "State JSON file")->required();
    lemma->add_option("--set", set, "Gate support S")->required();
    lemma->add_option("--eta", eta, "Gate phase");
    auto *pa = lemma->add_option("--part-a", part_a, "Bipartition side A of the input state");
    auto *pc = lemma->add_option("--part-c", part_c, "Bipartition side C of the output state");
    pa->needs(pc);
    pc->needs(pa);
    lemma->add_option("--phi", phi_path, "Output state JSON file (default: the gate applied to the input)");
    lemma->add_flag("--refutation", refutation, "Use the best rank-1 approximation of the output state");
    lemma->callback([&] {
        action = [&] {
            auto s = load_state(state_path);
            auto o = g.options();
            qaclab_report *r = nullptr;
            if (part_a.empty()) {
                check(qaclab_lemma_entanglement(s.get(), set.c_str(), opt_cstr(eta), &o, &r));
            } else {
                StatePtr phi;
                if (!phi_path.empty()) phi = load_state(phi_path);
                check(qaclab_test_string_witness(s.get(), phi.get(), set.c_str(), part_a.c_str(), part_c.c_str(),
                                                 opt_cstr(eta), refutation, &o, &r));
            }
            return emit(r, g.json);
        };
    });

    auto *kill = app.add_subcommand("kill-parity", "Build a pure-parity state that turns off C-SIGN gates");
    std::string unitaries_path;
    std::vector<int> random_nk;
    std::string qubits_text;
    int parity_bit = 0;
    auto *ku = kill->add_option("unitaries", unitaries_path, "Unitaries JSON file");
    auto *kr = kill->add_option("--random", random_nk, "Use k Haar-random n-qubit unitaries: --random n k")
                   ->expected(2);
    auto *kc = kill->add_option("--circuit", circuit_path, "Depth-2 circuit: turn off both gates on three qubits");
    kill->add_option("--qubits", qubits_text, "Three qubit labels for --circuit, e.g. 1,2,3");
    kill->add_option("--bit", parity_bit, "Parity bit b")->check(CLI::Range(0, 1));
    ku->excludes(kr)->excludes(kc);
    kr->excludes(kc);
    kill->callback([&] {
        action = [&] {
            auto o = g.options();
            qaclab_report *r = nullptr;
            if (!circuit_path.empty()) {
                int q[3];
                if (std::sscanf(qubits_text.c_str(), "%d,%d,%d", &q[0], &q[1], &q[2]) != 3) {
                    throw CLI::ValidationError("--qubits", "expected three labels such as 1,2,3");
                }
                auto c = load_circuit(circuit_path);
                check(qaclab_kill_parity_depth2(c.get(), q[0], q[1], q[2], parity_bit, &o, &r));
            } else if (!random_nk.empty()) {
                check(qaclab_kill_parity_random(random_nk[0], random_nk[1], parity_bit, &o, &r));
            } else if (!unitaries_path.empty()) {
                check(qaclab_kill_parity(read_file(unitaries_path).c_str(), parity_bit, &o, &r));
            } else {
                throw CLI::RequiredError("unitaries, --random or --circuit");
            }
            return emit(r, g.json);
        };
    });

    auto *refute = app.add_subcommand("refute-depth1", "Show a depth-1 circuit cannot compute parity of 3 bits");
    refute->add_option("circuit", circuit_path, "Circuit JSON file")->required();
    refute->callback([&] {
        action = [&] {
            auto c = load_circuit(circuit_path);
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_refute_depth1(c.get(), &o, &r));
            return emit(r, g.json);
        };
    });

    auto *appendix = app.add_subcommand("appendix-b", "Check or generate instances of the phase equation systems");
    std::string values_path, generate;
    auto *av = appendix->add_option("values", values_path, "Equation values JSON file");
    auto *ag = appendix->add_option("--generate", generate, "Generate an instance: 4sets, 3sets or 2sets");
    av->excludes(ag);
    appendix->callback([&] {
        action = [&] {
            auto o = g.options();
            qaclab_report *r = nullptr;
            if (!generate.empty()) {
                check(qaclab_appendix_b_generate(generate.c_str(), &o, &r));
            } else if (!values_path.empty()) {
                check(qaclab_appendix_b_check(read_file(values_path).c_str(), &o, &r));
            } else {
                throw CLI::RequiredError("values or --generate");
            }
            return emit(r, g.json);
        };
    });

    auto *search = app.add_subcommand("search-depth2", "Optimize a depth-2 topology towards clean parity");
    std::string topology;
    int n = 0, m = 0;
    search->add_option("topology", topology, "Descriptor such as \"{1,2,3}/{1,2,3}\", or a JSON file")->required();
    search->add_option("--n", n, "Number of inputs");
    search->add_option("--m", m, "Total number of qubits");
    search->add_option("--threads", g.threads, "Worker threads (default: THREADS or hardware)");
    search->callback([&] {
        action = [&] {
            std::string text = topology;
            if (text.find('{') == std::string::npos && text.find('[') == std::string::npos) text = read_file(text);
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_search_depth2(text.c_str(), n, m, &o, &r));
            return emit(r, g.json);
        };
    });

    auto *sweep = app.add_subcommand("sweep", "Optimize every canonical depth-2 topology");
    int m_max = 0;
    sweep->add_option("--n", n, "Number of inputs")->required();
    sweep->add_option("--m-max", m_max, "Largest total qubit count")->required();
    sweep->add_option("--threads", g.threads, "Worker threads (default: THREADS or hardware)");
    sweep->callback([&] {
        action = [&] {
            auto o = g.options();
            qaclab_report *r = nullptr;
            check(qaclab_sweep(n, m_max, &o, &r));
            return emit(r, g.json);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action();
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitUsage;
    }
}
