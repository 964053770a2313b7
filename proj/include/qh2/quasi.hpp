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

#include "qh2/matrix.hpp"
#include "qh2/tolerance.hpp"

namespace qh2 {

/// A quasi-Hermitian operator q*I + [[a, b], [c, -a]] with q real and
/// a^2 + b*c real and non-negative. Construct through
/// validate_quasi_hermitian to get the invariants checked.
struct QuasiHermitianOp {
    double q = 0.0;
    Complex a{};
    Complex b{};
    Complex c{};

    Mat2 matrix() const { return {q + a, b, c, q - a}; }
    Mat2 traceless() const { return {a, b, c, -a}; }
    /// a^2 + b*c, the square of the eigenvalue magnitude E.
    Complex discriminant() const { return a * a + b * c; }
    double energy() const;  // E = sqrt(Re(a^2 + b c)), clamped at zero
    /// Strictly triangular traceless part: exactly one of b, c vanishes.
    bool is_triangular(double tol = kAcceptTol) const;
    bool is_scalar(double tol = kAcceptTol) const;
};

/// Complex angle parametrization of a traceless operator:
/// E * [[cos t, e^{-i p} sin t], [e^{i p} sin t, -cos t]].
struct AngleForm {
    double energy = 0.0;
    Complex theta{};
    Complex phi{};
};

enum class RejectReason { ComplexTrace, ComplexOrNegativeDiscriminant, NonDiagonalizable };

const char* to_string(RejectReason r);

/// Throws Error(NotQuasiHermitian) with reason "complex-trace",
/// "complex-or-negative-discriminant" or "non-diagonalizable".
QuasiHermitianOp validate_quasi_hermitian(const Mat2& m, double tol = kAcceptTol);

/// The same verdict reached through eigen2 alone: real spectrum and
/// diagonalizable. Kept as an independent cross-check of the algebraic test.
bool spectral_route_accepts(const Mat2& m, double tol = kAcceptTol);

/// Re(theta) lands in [0, pi] and Re(phi) in [0, 2 pi). E = 0 maps to
/// theta = phi = 0, and phi = 0 whenever sin(theta) = 0. Throws
/// TriangularUnrepresentable when exactly one of b, c vanishes.
AngleForm to_angle_form(const QuasiHermitianOp& op, double tol = kAcceptTol);

/// Traceless operator (q = 0) for the given angles.
QuasiHermitianOp from_angle_form(const AngleForm& af);

}  // namespace qh2
