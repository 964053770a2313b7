// Copyright 2026 The qh2 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qh2/matrix.hpp"

namespace qh2::cli {

/// Exit codes: 0 success or true verdict, 1 false verdict or refusal,
/// 2 malformed input.
enum ExitCode : int { kOk = 0, kRefused = 1, kMalformed = 2 };

/// Runs one invocation. `args` excludes the program name. Exactly one JSON
/// object is written to `out`; diagnostics go to `err`. `tol_env` is the
/// raw value of QH2_TOL, if set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> tol_env = std::nullopt);

/// Parses a MatrixDocument: {"matrix": [[[re, im], [re, im]], [[re, im], [re, im]]], "label": "..."}.
/// Throws std::invalid_argument on any shape or type error.
Mat2 parse_matrix_document(std::string_view text);

/// Reads `arg` as inline JSON when it starts with '{', as a file path otherwise.
std::string load_document(const std::string& arg);

/// Serializes with every floating-point value printed to 17 significant
/// digits; non-finite values become null.
std::string dump17(const nlohmann::ordered_json& j);

}  // namespace qh2::cli
