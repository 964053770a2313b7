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

#include "qh2/error.hpp"

namespace qh2 {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotQuasiHermitian: return "NotQuasiHermitian";
        case ErrorCode::TriangularUnrepresentable: return "TriangularUnrepresentable";
        case ErrorCode::ZeroNormalization: return "ZeroNormalization";
        case ErrorCode::CaseMismatch: return "CaseMismatch";
        case ErrorCode::NoCompatibleMetric: return "NoCompatibleMetric";
        case ErrorCode::DegeneratePair: return "DegeneratePair";
        case ErrorCode::NotCompatible: return "NotCompatible";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    }
    return "Unknown";
}

}  // namespace qh2
