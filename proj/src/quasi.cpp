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

#include "qh2/quasi.hpp"

#include <cmath>
#include <numbers>

#include "qh2/error.hpp"

namespace qh2 {

namespace {

constexpr double kPi = std::numbers::pi;

double discriminant_scale(Complex a, Complex b, Complex c) {
    return std::max(1.0, std::norm(a) + std::abs(b) * std::abs(c));
}

Complex wrap_phi(Complex phi) {
    double re = std::fmod(phi.real(), 2.0 * kPi);
    if (re < 0.0) re += 2.0 * kPi;
    if (re >= 2.0 * kPi) re = 0.0;
    return {re, phi.imag()};
}

}  // namespace

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::ComplexTrace: return "complex-trace";
        case RejectReason::ComplexOrNegativeDiscriminant: return "complex-or-negative-discriminant";
        case RejectReason::NonDiagonalizable: return "non-diagonalizable";
    }
    return "unknown";
}

double QuasiHermitianOp::energy() const { return std::sqrt(std::max(0.0, discriminant().real())); }

bool QuasiHermitianOp::is_triangular(double tol) const {
    const double scale = frobenius_norm(traceless());
    const bool b_zero = std::abs(b) <= tol * scale;
    const bool c_zero = std::abs(c) <= tol * scale;
    return b_zero != c_zero;
}

bool QuasiHermitianOp::is_scalar(double tol) const {
    return frobenius_norm(traceless()) <= mixed_tol(tol, std::abs(q));
}

QuasiHermitianOp validate_quasi_hermitian(const Mat2& m, double tol) {
    if (!m.is_finite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
    auto reject = [](RejectReason r, const std::string& detail) {
        return Error(ErrorCode::NotQuasiHermitian, detail, to_string(r));
    };

    const Complex q = 0.5 * m.trace();
    if (std::abs(q.imag()) > mixed_tol(tol, std::abs(q)))
        throw reject(RejectReason::ComplexTrace, "trace is not real");

    QuasiHermitianOp op{q.real(), 0.5 * (m(0, 0) - m(1, 1)), m(0, 1), m(1, 0)};
    const Complex disc = op.discriminant();
    const double scale = discriminant_scale(op.a, op.b, op.c);
    if (std::abs(disc.imag()) > tol * scale || disc.real() < -tol * scale)
        throw reject(RejectReason::ComplexOrNegativeDiscriminant, "a^2 + b c is not a non-negative real");

    // Same coincidence rule as eigen2: |lambda1 - lambda2| = 2 sqrt|disc|.
    const double matrix_scale = std::max(1.0, frobenius_norm(m));
    if (2.0 * std::sqrt(std::abs(disc)) <= tol * matrix_scale &&
        frobenius_norm(op.traceless()) > tol * matrix_scale)
        throw reject(RejectReason::NonDiagonalizable, "nonzero nilpotent traceless part");
    return op;
}

bool spectral_route_accepts(const Mat2& m, double tol) {
    const Eigen2 eig = eigen2(m);
    if (!eig.diagonalizable) return false;
    for (const auto& v : eig.values)
        if (std::abs(v.imag()) > mixed_tol(tol, std::abs(v))) return false;
    return true;
}

AngleForm to_angle_form(const QuasiHermitianOp& op, double tol) {
    const double e = op.energy();
    if (e == 0.0 || op.is_scalar(tol)) return {};
    if (op.is_triangular(tol))
        throw Error(ErrorCode::TriangularUnrepresentable,
                    "exactly one off-diagonal entry vanishes; no finite angle form exists");

    AngleForm af;
    af.energy = e;
    const double scale = frobenius_norm(op.traceless());
    if (std::abs(op.b) <= tol * scale && std::abs(op.c) <= tol * scale) {
        // Diagonal: cos(theta) = +-1, sin(theta) = 0, phi := 0.
        af.theta = op.a.real() >= 0.0 ? 0.0 : kPi;
        return af;
    }

    Complex theta = std::acos(op.a / e);
    if (theta.real() < 0.0) theta = -theta;
    af.theta = theta;

    const Complex sin_theta = std::sin(theta);
    const Complex i(0.0, 1.0);
    Complex phi = -0.5 * i * std::log(op.c / op.b);
    const Complex b_hat = e * std::exp(-i * phi) * sin_theta;
    if (std::abs(op.b - b_hat) > std::abs(op.b + b_hat)) phi += kPi;
    af.phi = wrap_phi(phi);
    return af;
}

QuasiHermitianOp from_angle_form(const AngleForm& af) {
    const Complex i(0.0, 1.0);
    const Complex s = af.energy * std::sin(af.theta);
    return {0.0, af.energy * std::cos(af.theta), std::exp(-i * af.phi) * s, std::exp(i * af.phi) * s};
}

}  // namespace qh2
