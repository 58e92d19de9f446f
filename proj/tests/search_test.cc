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

#include <gtest/gtest.h>

#include <set>

#include "qaclab/errors.hpp"
#include "qaclab/io.hpp"
#include "qaclab/search.hpp"

using namespace qaclab;

namespace {

Topology full_topology(int n) {
    Topology t;
    t.n = n;
    t.m = n;
    t.layers = {MultiLayer{{QubitSet::range(1, n)}}, MultiLayer{{QubitSet::range(1, n)}}};
    return t;
}

}  // namespace

TEST(Topology, string_form_and_validation) {
    auto t = full_topology(3);
    EXPECT_EQ(t.str(), "{1,2,3}/{1,2,3}");
    EXPECT_NO_THROW(t.validate());
    t.layers[0].csign.push_back(QubitSet{3, 4});
    EXPECT_THROW(t.validate(), ValidationError);
    EXPECT_EQ(parse_topology("{1,2,3}/{1,2,3}", 3, 3).str(), "{1,2,3}/{1,2,3}");
}

TEST(ParamCircuit, layout_and_identity) {
    auto t = full_topology(3);
    EXPECT_EQ(ParamCircuit::param_count(t), 4u * 3 * 3);
    auto id = ParamCircuit::identity(t);
    auto c = id.materialize();
    EXPECT_EQ(c.depth(), 2);
    // two identical CSIGNs cancel: the identity-parameter circuit is the identity
    auto in = QuantumState::basis("111");
    EXPECT_LT((apply_circuit(c, in).amplitudes() - in.amplitudes()).norm(), 1e-15);
}

TEST(ParamCircuit, loss_matches_clean_check_distances) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 6.28);
    Topology t;
    t.n = 2;
    t.m = 3;
    t.layers = {MultiLayer{{QubitSet{1, 3}}}, MultiLayer{{QubitSet{1, 2, 3}}}};
    ParamCircuit pc = ParamCircuit::identity(t);
    for (auto &p : pc.params) p = u(rng);
    auto rep = check_clean_simulation(pc.materialize(), CleanTarget{});
    double acc = 0;
    for (double d : rep.distances) acc += d * d;
    EXPECT_NEAR(clean_sim_loss(pc), acc, 1e-12);
    auto pf = check_clean_simulation(pc.materialize(), CleanTarget{}, kDefaultTolerance, true);
    double acc_pf = 0;
    for (double d : pf.distances) acc_pf += d * d;
    EXPECT_NEAR(clean_sim_loss(pc, true), acc_pf, 1e-12);
}

TEST(Optimize, finds_two_bit_parity) {
    Topology t;
    t.n = 2;
    t.m = 2;
    t.layers = {MultiLayer{{QubitSet{1, 2}}}, MultiLayer{{QubitSet{1, 2}}}};
    SearchOptions o;
    o.restarts = 8;
    o.seed = 1;
    o.threads = 1;
    auto r = optimize_depth2(t, o);
    EXPECT_LT(r.best_loss, 1e-8);
    EXPECT_EQ(r.restart_losses.size(), 8u);
    ParamCircuit pc{t, r.best_params};
    EXPECT_NEAR(clean_sim_loss(pc), r.best_loss, 1e-12);
    EXPECT_TRUE(check_clean_simulation(pc.materialize(), CleanTarget{}, 1e-4).passed);
}

TEST(Optimize, deterministic_for_seed_and_thread_count) {
    auto t = full_topology(3);
    SearchOptions o;
    o.restarts = 3;
    o.seed = 7;
    o.budget_iters = 30;
    o.threads = 1;
    auto a = optimize_depth2(t, o);
    o.threads = 2;
    auto b = optimize_depth2(t, o);
    EXPECT_EQ(a.restart_losses, b.restart_losses);
    EXPECT_EQ(a.best_params, b.best_params);
}

TEST(Topologies, canonical_enumeration) {
    auto ts = canonical_topologies(3, 3);
    std::set<std::string> names;
    for (const auto &t : ts) {
        names.insert(t.str());
        EXPECT_NO_THROW(t.validate());
        EXPECT_EQ(t.layers.size(), 2u);
    }
    EXPECT_EQ(names.size(), ts.size());
    EXPECT_TRUE(names.count("{1,2,3}/{1,2,3}"));
    // relabeling inputs 2 and 3 gives one representative
    EXPECT_EQ(names.count("{1,2}/{1,3}") + names.count("{1,3}/{1,2}"), 1u);
    // input 3 never meets the target
    EXPECT_FALSE(names.count("{1,2}/{1,2}"));
    for (const auto &t : canonical_topologies(3, 4)) {
        QubitSet used;
        for (const auto &l : t.layers)
            for (QubitSet g : l.csign) used = used | g;
        EXPECT_TRUE(used.contains(4)) << t.str();
    }
    EXPECT_THROW(sweep_candidates(4, 6, false, 10), PreconditionError);
}
