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

#include <algorithm>

namespace qh2 {

// Accept/reject decisions (reality, positivity, pseudo-Hermiticity).
inline constexpr double kAcceptTol = 1e-9;
// Internal self-checks on values the library itself produced.
inline constexpr double kSelfCheckTol = 1e-10;
// Numerical rank: pivots below this fraction of the largest are zero.
inline constexpr double kPivotTol = 1e-10;
// Hermiticity precondition of pd_sqrt.
inline constexpr double kHermitianTol = 1e-12;

inline double mixed_tol(double tol, double scale) { return tol * std::max(1.0, scale); }

}  // namespace qh2
