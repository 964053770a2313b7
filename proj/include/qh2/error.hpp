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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qh2 {

enum class ErrorCode {
    NotPositiveDefinite,
    Inconsistent,
    NotQuasiHermitian,
    TriangularUnrepresentable,
    ZeroNormalization,
    CaseMismatch,
    NoCompatibleMetric,
    DegeneratePair,
    NotCompatible,
    InvalidArgument,
    PostconditionFailed,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. `reason` is a short
/// sub-code (e.g. "complex-trace"), `what()` the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail, std::string reason = {})
        : std::runtime_error(detail), code_(code), reason_(std::move(reason)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    ErrorCode code_;
    std::string reason_;
};

}  // namespace qh2
