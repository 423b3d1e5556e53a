/*
 * Copyright 2026 The lueroth-kit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lueroth {

/// One verified statement. Informational statements record classical facts
/// that are checked but do not gate the exit code.
struct Statement {
    std::string id;      // "module/short-name"
    std::string anchor;  // what is being checked, in one line
    bool informational = false;
    bool pass = false;
    std::string details;
    double ms = 0.0;
};

struct VerificationReport {
    uint64_t seed = 0;
    std::string convention;
    std::vector<Statement> statements;

    /// Number of failing non-informational statements.
    int failures() const;
    /// Machine-readable form. Deliberately excludes timings so that equal
    /// seeds produce byte-identical reports.
    nlohmann::json to_json() const;
    /// Human-readable table (includes timings).
    std::string to_table() const;
};

/// Runs every statement whose id starts with `only` (all when empty), in a
/// fixed order, each deterministic in the seed.
VerificationReport verify_paper(uint64_t seed, const std::string& only = "");

}  // namespace lueroth
