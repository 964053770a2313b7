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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace qh2 {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

/// Dense 2x2 complex matrix stored row-major.
struct Mat2 {
    std::array<Complex, 4> m{};

    constexpr Mat2() = default;
    constexpr Mat2(Complex m00, Complex m01, Complex m10, Complex m11) : m{m00, m01, m10, m11} {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }
    static constexpr Mat2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr Complex& operator()(std::size_t i, std::size_t j) { return m[2 * i + j]; }
    constexpr const Complex& operator()(std::size_t i, std::size_t j) const { return m[2 * i + j]; }

    Complex trace() const { return m[0] + m[3]; }
    Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
    Mat2 adjoint() const { return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}; }
    /// Throws Error(InvalidArgument) when the determinant vanishes.
    Mat2 inverse() const;
    bool is_finite() const;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& a);
Mat2 operator*(const Mat2& a, Complex s);
Vec2 operator*(const Mat2& a, const Vec2& v);

double frobenius_norm(const Mat2& a);
double norm(const Vec2& v);
Complex inner(const Vec2& x, const Vec2& y);  // conjugate-linear in x
Mat2 outer(const Vec2& x, const Vec2& y);     // |x><y|

Mat2 commutator(const Mat2& a, const Mat2& b);

/// ||a - a^dagger||_F
double hermiticity_defect(const Mat2& a);

struct Eigen2 {
    std::array<Complex, 2> values;
    std::array<Vec2, 2> vectors;  // unit norm
    bool diagonalizable = true;
};

/// Closed-form eigen-decomposition from trace and determinant. values[0]
/// is mid + sqrt(disc) with the principal square root. For a Jordan block
/// both vectors coincide and `diagonalizable` is false.
Eigen2 eigen2(const Mat2& m);

/// Hermitian positive-definite square root; throws NotPositiveDefinite.
Mat2 pd_sqrt(const Mat2& m);

// Dense real linear systems -------------------------------------------------

struct RealLinearSystem {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;  // empty means homogeneous
    std::size_t n_unknowns = 0;
};

struct LinearSolution {
    std::size_t rank = 0;
    std::optional<std::vector<double>> particular;  // absent for homogeneous systems
    std::vector<std::vector<double>> kernel;        // basis of the null space
    bool unique() const { return particular.has_value() && kernel.empty(); }
};

/// Row reduction with partial pivoting. Pivots smaller than kPivotTol times
/// the largest absolute coefficient count as zero. Throws Inconsistent for
/// an unsolvable inhomogeneous system and InvalidArgument on shape errors.
LinearSolution solve_real_linear(const RealLinearSystem& sys);

}  // namespace qh2
