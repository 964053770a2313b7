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

#include <optional>
#include <utility>

#include "qh2/matrix.hpp"
#include "qh2/quasi.hpp"

namespace qh2 {

/// Half-angle coefficients of the metric family:
/// mA = |cos(t/2)|^2, mB = |sin(t/2)|^2, zeta = sin(t/2) cos(conj(t)/2).
struct MetricCoefficients {
    double mA = 1.0;
    double mB = 0.0;
    Complex zeta{};
};

/// k = |n2|^2 sets the overall scale, u = |n1/n2|^2 the relative weight of
/// the +E eigenvector of H0^dagger.
struct MetricParams {
    double k = 1.0;
    double u = 1.0;
};

/// Hermitian positive-definite metric. `params` is absent for metrics
/// supplied directly as a matrix; `coeffs`/`phi` are absent for metrics
/// built without an angle form (triangular operators, direct input).
struct MetricOperator {
    Mat2 matrix = Mat2::identity();
    std::optional<MetricParams> params;
    std::optional<MetricCoefficients> coeffs;
    std::optional<Complex> phi;

    /// Wraps a user-supplied matrix after checking Hermiticity and
    /// positive-definiteness; throws NotPositiveDefinite.
    static MetricOperator from_matrix(const Mat2& m);
};

MetricCoefficients metric_coefficients(Complex theta);

/// Eigenvectors of H0^dagger for +E and -E, scaled by n1 and n2. Throws
/// ZeroNormalization if either scale vanishes.
std::pair<Vec2, Vec2> adjoint_eigenvectors(const AngleForm& af, Complex n1, Complex n2);

/// Closed-form metric for the angle form. Throws InvalidArgument unless
/// k > 0 and u > 0.
MetricOperator build_metric(const AngleForm& af, const MetricParams& params);

/// Eigenvectors of H0^dagger (for +E, -E) used as the metric basis of an
/// operator. Angle-representable operators use adjoint_eigenvectors with
/// unit normalizations; triangular ones use unit eigenvectors from eigen2.
std::pair<Vec2, Vec2> metric_basis(const QuasiHermitianOp& op);

/// Metric family for any valid operator: the closed form when an angle form
/// exists, otherwise k (u |v+><v+| + |v-><v-|) over unit eigenvectors of H0^dagger.
MetricOperator build_metric(const QuasiHermitianOp& op, const MetricParams& params);

/// <psi | eta chi>
Complex inner_product_plus(const MetricOperator& eta, const Vec2& psi, const Vec2& chi);

struct PseudoHermiticity {
    bool holds = false;
    double residual = 0.0;  // ||O^dagger eta - eta O||_F
};

/// holds iff residual <= tol * ||eta|| * ||O||.
PseudoHermiticity check_pseudo_hermitian(const Mat2& op, const MetricOperator& eta, double tol = kAcceptTol);

}  // namespace qh2
