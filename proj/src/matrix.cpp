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

#include "qh2/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qh2/error.hpp"
#include "qh2/tolerance.hpp"

namespace qh2 {

Mat2 Mat2::inverse() const {
    const Complex d = det();
    if (d == Complex(0.0)) throw Error(ErrorCode::InvalidArgument, "matrix is singular");
    return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

bool Mat2::is_finite() const {
    return std::all_of(m.begin(), m.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]};
}

Mat2 operator-(const Mat2& a) { return {-a.m[0], -a.m[1], -a.m[2], -a.m[3]}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
            a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
}

Mat2 operator*(Complex s, const Mat2& a) { return {s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}; }
Mat2 operator*(const Mat2& a, Complex s) { return s * a; }

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.m[0] * v[0] + a.m[1] * v[1], a.m[2] * v[0] + a.m[3] * v[1]};
}

double frobenius_norm(const Mat2& a) {
    double s = 0.0;
    for (const auto& z : a.m) s += std::norm(z);
    return std::sqrt(s);
}

double norm(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

Complex inner(const Vec2& x, const Vec2& y) { return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1]; }

Mat2 outer(const Vec2& x, const Vec2& y) {
    return {x[0] * std::conj(y[0]), x[0] * std::conj(y[1]), x[1] * std::conj(y[0]), x[1] * std::conj(y[1])};
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

double hermiticity_defect(const Mat2& a) { return frobenius_norm(a - a.adjoint()); }

namespace {

Vec2 unit(const Vec2& v) {
    const double n = norm(v);
    return {v[0] / n, v[1] / n};
}

// Null vector of (m - lambda I), picking the better conditioned of the two rows.
std::optional<Vec2> null_vector(const Mat2& m, Complex lambda) {
    const Vec2 from_row0{m(0, 1), lambda - m(0, 0)};
    const Vec2 from_row1{lambda - m(1, 1), m(1, 0)};
    const Vec2& best = norm(from_row0) >= norm(from_row1) ? from_row0 : from_row1;
    if (norm(best) == 0.0) return std::nullopt;
    return unit(best);
}

}  // namespace

Eigen2 eigen2(const Mat2& m) {
    const Complex mid = 0.5 * m.trace();
    const Complex half_diff = 0.5 * (m(0, 0) - m(1, 1));
    const Complex root = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));

    Eigen2 out;
    out.values = {mid + root, mid - root};

    const double scale = std::max(1.0, frobenius_norm(m));
    const bool coincident = std::abs(out.values[0] - out.values[1]) <= 1e-9 * scale;
    const bool scalar = frobenius_norm(m - mid * Mat2::identity()) <= 1e-9 * scale;

    if (coincident && scalar) {
        out.vectors = {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
        return out;
    }
    for (std::size_t k = 0; k < 2; ++k) {
        auto v = null_vector(m, out.values[k]);
        out.vectors[k] = v ? *v : (k == 0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0});
    }
    out.diagonalizable = !coincident;
    return out;
}

Mat2 pd_sqrt(const Mat2& m) {
    if (!m.is_finite()) throw Error(ErrorCode::NotPositiveDefinite, "matrix has non-finite entries");
    const double scale = frobenius_norm(m);
    if (hermiticity_defect(m) > mixed_tol(kHermitianTol, scale))
        throw Error(ErrorCode::NotPositiveDefinite, "matrix is not Hermitian");
    const Mat2 h = 0.5 * (m + m.adjoint());
    const double tr = h.trace().real();
    const double det = h.det().real();
    if (!(tr > 0.0) || !(det > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive-definite");
    const double root_det = std::sqrt(det);
    return (1.0 / std::sqrt(tr + 2.0 * root_det)) * (h + root_det * Mat2::identity());
}

LinearSolution solve_real_linear(const RealLinearSystem& sys) {
    const std::size_t n = sys.n_unknowns;
    const std::size_t m = sys.rows.size();
    const bool homogeneous = sys.rhs.empty();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "system has no unknowns");
    if (!homogeneous && sys.rhs.size() != m) throw Error(ErrorCode::InvalidArgument, "rows and rhs differ in length");

    // Augmented copy; column n holds the right-hand side.
    std::vector<std::vector<double>> a(m, std::vector<double>(n + 1, 0.0));
    double largest = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.rows[i].size() != n) throw Error(ErrorCode::InvalidArgument, "row length differs from n_unknowns");
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = sys.rows[i][j];
            largest = std::max(largest, std::abs(a[i][j]));
        }
        a[i][n] = homogeneous ? 0.0 : sys.rhs[i];
    }
    const double threshold = kPivotTol * largest;

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t best = row;
        for (std::size_t i = row + 1; i < m; ++i)
            if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
        if (largest == 0.0 || std::abs(a[best][col]) <= threshold) continue;
        std::swap(a[row], a[best]);
        const double p = a[row][col];
        for (std::size_t j = col; j <= n; ++j) a[row][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0.0) continue;
            const double f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    LinearSolution out;
    out.rank = pivot_cols.size();

    if (!homogeneous) {
        double rhs_scale = 0.0;
        for (double b : sys.rhs) rhs_scale = std::max(rhs_scale, std::abs(b));
        for (std::size_t i = out.rank; i < m; ++i)
            if (std::abs(a[i][n]) > kPivotTol * std::max(1.0, rhs_scale))
                throw Error(ErrorCode::Inconsistent, "inhomogeneous system has no solution");
        std::vector<double> x(n, 0.0);
        for (std::size_t r = 0; r < out.rank; ++r) x[pivot_cols[r]] = a[r][n];
        out.particular = std::move(x);
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<double> v(n, 0.0);
        v[f] = 1.0;
        for (std::size_t r = 0; r < out.rank; ++r) v[pivot_cols[r]] = -a[r][f];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace qh2
