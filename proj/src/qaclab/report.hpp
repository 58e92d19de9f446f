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

#ifndef QACLAB_REPORT_HPP
#define QACLAB_REPORT_HPP

#include <optional>
#include <string>

#include "qaclab/constructions.hpp"
#include "qaclab/io.hpp"
#include "qaclab/test_strings.hpp"

namespace qaclab {

inline constexpr int kReportSchema = 1;

/// Outcome of a command. exit_code follows 0 = verified or completed,
/// 1 = refuted with a witness in the report.
struct Report {
    std::string command;
    std::string inputs_digest;
    double tolerance = kDefaultTolerance;
    uint64_t seed = 0;
    std::string verdict;
    int exit_code = 0;
    Json result;
    std::optional<double> wall_seconds;
    /// One human-readable line.
    std::string summary;

    Json to_json() const;
};

/// FNV-1a 64-bit hash as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string &data);

Json qubit_set_json(QubitSet s);
Json bit_string_json(const BitString &x);
Json matrix2_json(const Eigen::Matrix2cd &m);

Json to_json(const CleanSimulationReport &r);
Json to_json(const WeakParityReport &r);
Json to_json(const ProductFactors &f);
Json to_json(const SeparabilityResult &r);
Json to_json(const SimplifyStatus &s);
Json to_json(const EntanglementLemmaResult &r);
Json to_json(const EquationCheck &c);
Json to_json(const TestStringBundle &b);
Json to_json(const KillerStateCertificate &c);
Json to_json(const Depth2KillerResult &r);
Json to_json(const Depth1Refutation &r);
/// Timing is left out unless asked for so reports stay byte-stable.
Json to_json(const SearchReport &r, bool with_timing);

}  // namespace qaclab

#endif
