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

#include "qh2/sampling.hpp"

#include <numbers>

namespace qh2 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Open interval (lo, hi).
double uniform_open(Rng& rng, double lo, double hi) {
    double x = uniform(rng, lo, hi);
    while (x == lo) x = uniform(rng, lo, hi);
    return x;
}

}  // namespace

Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

AngleForm random_angle_form(Rng& rng, const AngleSampling& s) {
    constexpr double pi = std::numbers::pi;
    AngleForm af;
    af.energy = uniform_open(rng, 0.0, s.max_energy);
    af.theta = {uniform_open(rng, 0.0, pi), uniform(rng, -s.max_im_theta, s.max_im_theta)};
    af.phi = {uniform(rng, 0.0, 2.0 * pi), uniform(rng, -s.max_im_phi, s.max_im_phi)};
    return af;
}

ObservableFreeParams random_free_params(Rng& rng, ObservableCase c) {
    ObservableFreeParams p;
    if (c == ObservableCase::Case1)
        p.params = Case1Params{uniform(rng, -1.0, 1.0), {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}};
    else
        p.params = Case2Params{{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}, uniform(rng, -1.0, 1.0)};
    p.q = uniform(rng, -1.0, 1.0);
    return p;
}

std::vector<CompatibleObservable> sample_compatible(const AngleForm& af, double u, std::uint64_t seed,
                                                    std::size_t count) {
    const ObservableCase c = case_coefficients(af, u).label;
    std::vector<CompatibleObservable> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = stream(seed, i);
        out.push_back(construct_compatible(af, u, random_free_params(rng, c)));
    }
    return out;
}

}  // namespace qh2
