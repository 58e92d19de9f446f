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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(QACLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string &name) {
    return std::string(QACLAB_TEST_DATA) + "/" + name;
}

}  // namespace

TEST(Cli, check_clean_parity_passes) {
    auto r = run("--json check-clean " + data("cnot_parity.json") + " --target parity");
    ASSERT_EQ(r.exit_code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["verdict"], "verified");
    EXPECT_LT(j["result"]["max_distance"].get<double>(), 1e-12);
}

TEST(Cli, refute_depth1_exits_one_with_witness) {
    auto r = run("refute-depth1 " + data("depth1.json") + " --json");
    ASSERT_EQ(r.exit_code, 1) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "refuted");
    EXPECT_EQ(j["result"]["kind"], "killer_state");
    EXPECT_TRUE(j["result"]["killer"]["valid"].get<bool>());
}

TEST(Cli, usage_errors_exit_two) {
    EXPECT_EQ(run("--no-such-flag check-clean " + data("cnot_parity.json")).exit_code, 2);
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("check-clean " + data("overlap.json")).exit_code, 2);
    EXPECT_EQ(run("check-clean /nonexistent/file.json").exit_code, 2);
    EXPECT_EQ(run("separability " + data("ghz3.json")).exit_code, 2);
    EXPECT_EQ(run("check-clean " + data("cnot_parity.json") + " --target sideways").exit_code, 2);
}

TEST(Cli, help_exits_zero) {
    auto r = run("--help");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, state_commands) {
    EXPECT_EQ(run("separability " + data("ghz3.json") + " --set {1,2}").exit_code, 1);
    EXPECT_EQ(run("separability " + data("plus_plus.json") + " --set 1,2").exit_code, 0);
    auto s = run("simplify " + data("one_plus.json") + " --set {1,2} --json");
    ASSERT_EQ(s.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(s.out)["verdict"], "simplifies_to");
    EXPECT_EQ(run("lemma-entanglement " + data("ghz3.json") + " --set {1,2,3} --eta i").exit_code, 0);
    auto w = run("lemma-entanglement " + data("plus_plus.json") + " --set {1,2} --part-a {1} --part-c {1} --refutation");
    EXPECT_EQ(w.exit_code, 0) << w.out;
    EXPECT_NE(w.out.find("certified"), std::string::npos);
}

TEST(Cli, constructions) {
    EXPECT_EQ(run("kill-parity " + data("cnot_unitaries.json") + " --bit 1").exit_code, 0);
    EXPECT_EQ(run("kill-parity --random 4 3 --seed 9").exit_code, 0);
    EXPECT_EQ(run("appendix-b " + data("two_sets.json")).exit_code, 0);
    EXPECT_EQ(run("appendix-b --generate 3sets --seed 4").exit_code, 0);
    EXPECT_EQ(run("check-weak " + data("cnot_parity.json")).exit_code, 0);
    EXPECT_EQ(run("simulate " + data("cnot_parity.json") + " --input 11").exit_code, 0);
}

TEST(Cli, reports_are_byte_stable) {
    auto a = run("--json --seed 5 kill-parity --random 3 2");
    auto b = run("--json --seed 5 kill-parity --random 3 2");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    auto s1 = run("--json --restarts 2 --budget-iters 10 search-depth2 {1,2}/{1,2} --n 2 --m 2");
    auto s2 = run("--json --restarts 2 --budget-iters 10 search-depth2 {1,2}/{1,2} --n 2 --m 2 --threads 2");
    EXPECT_EQ(s1.exit_code, 0);
    EXPECT_EQ(s1.out, s2.out);
}
