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

#include "qh2/metric.hpp"

#include <cmath>

#include "qh2/error.hpp"

namespace qh2 {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_params(const MetricParams& p) {
    if (!(p.k > 0.0) || !(p.u > 0.0) || !std::isfinite(p.k) || !std::isfinite(p.u))
        throw Error(ErrorCode::InvalidArgument, "metric parameters k and u must be positive and finite");
}

}  // namespace

MetricOperator MetricOperator::from_matrix(const Mat2& m) {
    pd_sqrt(m);  // throws NotPositiveDefinite
    MetricOperator eta;
    eta.matrix = 0.5 * (m + m.adjoint());
    eta.params.reset();
    return eta;
}

MetricCoefficients metric_coefficients(Complex theta) {
    const Complex half = 0.5 * theta;
    const Complex half_conj = std::conj(half);
    return {std::norm(std::cos(half)), std::norm(std::sin(half)), std::sin(half) * std::cos(half_conj)};
}

std::pair<Vec2, Vec2> adjoint_eigenvectors(const AngleForm& af, Complex n1, Complex n2) {
    if (n1 == Complex(0.0) || n2 == Complex(0.0))
        throw Error(ErrorCode::ZeroNormalization, "eigenvector normalizations must be nonzero");
    const Complex half_conj = 0.5 * std::conj(af.theta);
    const Complex phase = std::exp(kI * std::conj(af.phi));
    const Complex c = std::cos(half_conj);
    const Complex s = std::sin(half_conj);
    return {Vec2{n1 * c, n1 * phase * s}, Vec2{n2 * s, -n2 * phase * c}};
}

MetricOperator build_metric(const AngleForm& af, const MetricParams& params) {
    require_params(params);
    const MetricCoefficients co = metric_coefficients(af.theta);
    const double u = params.u;
    const Complex zeta = co.zeta;
    const Complex off = std::exp(-kI * af.phi) * (u * zeta - std::conj(zeta));
    const double growth = std::exp(2.0 * af.phi.imag());  // e^{i(phi* - phi)}

    MetricOperator eta;
    eta.matrix = params.k * Mat2{co.mA * u + co.mB, off, std::conj(off), growth * (co.mA + co.mB * u)};
    eta.params = params;
    eta.coeffs = co;
    eta.phi = af.phi;
    return eta;
}

std::pair<Vec2, Vec2> metric_basis(const QuasiHermitianOp& op) {
    if (!op.is_triangular()) return adjoint_eigenvectors(to_angle_form(op), 1.0, 1.0);
    const Eigen2 eig = eigen2(op.traceless().adjoint());
    const bool first_is_plus = eig.values[0].real() >= eig.values[1].real();
    return first_is_plus ? std::pair{eig.vectors[0], eig.vectors[1]} : std::pair{eig.vectors[1], eig.vectors[0]};
}

MetricOperator build_metric(const QuasiHermitianOp& op, const MetricParams& params) {
    if (!op.is_triangular()) return build_metric(to_angle_form(op), params);
    require_params(params);
    const auto [plus, minus] = metric_basis(op);
    MetricOperator eta;
    eta.matrix = params.k * (params.u * outer(plus, plus) + outer(minus, minus));
    eta.params = params;
    return eta;
}

Complex inner_product_plus(const MetricOperator& eta, const Vec2& psi, const Vec2& chi) {
    return inner(psi, eta.matrix * chi);
}

PseudoHermiticity check_pseudo_hermitian(const Mat2& op, const MetricOperator& eta, double tol) {
    const double residual = frobenius_norm(op.adjoint() * eta.matrix - eta.matrix * op);
    return {residual <= tol * frobenius_norm(eta.matrix) * frobenius_norm(op), residual};
}

}  // namespace qh2
