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

// Test-only helpers and independent reference computations. Nothing here
// calls the library's closed forms.

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qh2/matrix.hpp"

namespace qh2::test {

constexpr Complex kI{0.0, 1.0};

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
    double d = 0.0;
    for (std::size_t e = 0; e < 4; ++e) d = std::max(d, std::abs(a.m[e] - b.m[e]));
    return d;
}

inline bool close(const Mat2& a, const Mat2& b, double rel = 1e-10) {
    return frobenius_norm(a - b) <= rel * std::max(1.0, frobenius_norm(b));
}

inline bool close(Complex a, Complex b, double rel = 1e-10) {
    return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

inline Complex random_complex(std::mt19937_64& rng, double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    const double re = d(rng);
    return {re, d(rng)};
}

inline Mat2 random_matrix(std::mt19937_64& rng, double lo = -5.0, double hi = 5.0) {
    return {random_complex(rng, lo, hi), random_complex(rng, lo, hi), random_complex(rng, lo, hi),
            random_complex(rng, lo, hi)};
}

// Entry-by-entry product written out longhand, independent of operator*.
inline Mat2 longhand_product(const Mat2& a, const Mat2& b) {
    Mat2 c;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 2; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

// det([A, B]) for traceless A = [[a, b], [c, -a]], B = [[a', b'], [c', -a']]
// by symbolic expansion of the commutator.
inline Complex commutator_det_expanded(Complex a, Complex b, Complex c, Complex ap, Complex bp, Complex cp) {
    const Complex d = b * cp - c * bp;    // (0,0) entry; (1,1) is -d
    const Complex off1 = 2.0 * (a * bp - b * ap);
    const Complex off2 = 2.0 * (c * ap - a * cp);
    return -d * d - off1 * off2;
}

// Brute-force Hermitian-PD check from the explicit eigenvalues of a
// Hermitian 2x2: (t/2) +- sqrt((d/2)^2 + |o|^2).
inline bool hermitian_pd(const Mat2& m) {
    const double t = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double d = 0.5 * (m(0, 0).real() - m(1, 1).real());
    return t - std::hypot(d, std::abs(m(0, 1))) > 0.0;
}

}  // namespace qh2::test
