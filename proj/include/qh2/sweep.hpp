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

#include <cstddef>
#include <cstdint>

namespace qh2::sweep {

// Batch property sweeps over randomly drawn operators. Every sweep has a
// serial reference path and an OpenMP path; both draw sample i from
// stream(seed, i) and reduce in index order, so their results are
// bitwise identical.

enum class Execution { Serial, Parallel };

int max_threads();

struct ZetaResult {
    std::size_t samples = 0;
    double max_abs_error = 0.0;  // |sin(t/2) cos(t*/2) - (sin Re t + i sinh Im t) / 2|
};

/// Re theta in (0, pi), Im theta in [-2, 2].
ZetaResult zeta_identity(std::size_t n, std::uint64_t seed, Execution ex);

struct MetricResult {
    std::size_t samples = 0;
    std::size_t not_positive_definite = 0;
    double max_hermiticity = 0.0;    // ||eta - eta^dagger|| / ||eta||
    double max_intertwining = 0.0;   // ||H0^dagger eta - eta H0|| / (||H0|| ||eta||)
    double max_gap_identity = 0.0;   // |r s - |lambda|^2 - e^{2 Im phi} u| / (e^{2 Im phi} u)
    double max_spectral_form = 0.0;  // ||eta - sum |phi_n><phi_n||| / ||eta||
};

/// u, k in (0, 10]; angles as in random_angle_form.
MetricResult metric_validity(std::size_t n, std::uint64_t seed, Execution ex);

struct ObservableResult {
    std::size_t samples = 0;
    std::size_t case1 = 0;
    std::size_t case2 = 0;
    std::size_t construction_failures = 0;
    std::size_t not_pseudo_hermitian = 0;  // at tolerance 1e-9, over the generating and 5 rescaled metrics
    double max_abs_im = 0.0;               // max |Im(a'^2 + b' c')|
    double min_re = 0.0;                   // min Re(a'^2 + b' c')
    double max_pseudo_residual = 0.0;      // relative
    double min_positivity_discriminant = 0.0;  // Case2 only
};

/// Even samples are Case1 (alternating theta = 0 with random u and real
/// theta with u = 1), odd samples are Case2 with complex theta.
ObservableResult observable_constraints(std::size_t n, std::uint64_t seed, Execution ex);

struct UniquenessResult {
    std::size_t samples = 0;
    std::size_t refused = 0;               // metric_from_pair threw
    std::size_t pair_kernel_not_one = 0;   // oracle joint kernel dimension != 1
    std::size_t single_kernel_not_two = 0;  // oracle kernel for H alone != 2
    std::size_t family_mismatch = 0;       // cross_validate(H) failed
    double max_u_rel_error = 0.0;
    double max_family_deviation = 0.0;
    double max_pair_deviation = 0.0;       // oracle ray vs recovered metric
};

/// Generated irreducible compatible pairs; a quarter are Case1.
UniquenessResult uniqueness(std::size_t n, std::uint64_t seed, Execution ex);

}  // namespace qh2::sweep
