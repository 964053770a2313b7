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

#include <cstdint>
#include <random>
#include <vector>

#include "qh2/observables.hpp"

namespace qh2 {

using Rng = std::mt19937_64;

/// Independent, reproducible stream for sample `index` of a run seeded
/// with `seed` (splitmix64 mixing). Lets serial and parallel sweeps draw
/// identical samples regardless of scheduling.
Rng stream(std::uint64_t seed, std::uint64_t index);

struct AngleSampling {
    double max_energy = 5.0;
    double max_im_theta = 1.0;
    double max_im_phi = 1.0;
};

/// E in (0, max], Re theta in (0, pi), Re phi in [0, 2 pi), imaginary parts
/// uniform in [-max, max].
AngleForm random_angle_form(Rng& rng, const AngleSampling& s = {});

/// Free parameters for the given case: real parts uniform in [-1, 1],
/// q' uniform in [-1, 1].
ObservableFreeParams random_free_params(Rng& rng, ObservableCase c);

/// `count` compatible partners of the operator with angle form `af` under
/// the metric with weight u, deterministic in `seed`.
std::vector<CompatibleObservable> sample_compatible(const AngleForm& af, double u, std::uint64_t seed,
                                                    std::size_t count);

}  // namespace qh2
