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
#include <variant>

#include "qh2/metric.hpp"
#include "qh2/quasi.hpp"

namespace qh2 {

enum class ObservableCase { Case1, Case2 };

const char* to_string(ObservableCase c);

/// Coefficients of the compatibility equations for a traceless partner
/// [[a', b'], [c', -a']] of H0 under the metric with weight u:
///   lambda = e^{i phi*} (u zeta* - zeta)
///   r      = e^{2 Im phi} (mA + mB u)
///   s      = mA u + mB
/// Case1 is lambda = 0, which happens exactly when theta is 0 (or pi), or
/// theta is real and u = 1.
struct CaseCoefficients {
    Complex lambda{};
    double r = 1.0;
    double s = 1.0;
    ObservableCase label = ObservableCase::Case1;
    /// Label reached from theta and u directly rather than from |lambda|.
    ObservableCase structural_label = ObservableCase::Case1;
    MetricCoefficients coeffs;
};

struct Case1Params {
    double re_a = 0.0;
    Complex b{};
};

struct Case2Params {
    Complex a{};
    double w = 0.0;
};

struct ObservableFreeParams {
    std::variant<Case1Params, Case2Params> params;
    double q = 0.0;
};

struct CompatibleObservable {
    QuasiHermitianOp op;
    ObservableFreeParams generated_from;
    ObservableCase label = ObservableCase::Case1;
    double u_used = 1.0;
};

CaseCoefficients case_coefficients(const AngleForm& af, double u);

/// Builds the compatible partner from free parameters. Throws CaseMismatch
/// when the parameter variant disagrees with case_coefficients(af, u).label,
/// and PostconditionFailed if the result is not real-spectrum or not
/// pseudo-Hermitian with respect to build_metric(af, {1, u}).
CompatibleObservable construct_compatible(const AngleForm& af, double u, const ObservableFreeParams& params);

struct RealityConstraints {
    double re_part = 0.0;  // Re(a'^2 + b' c'), must be >= 0
    double im_part = 0.0;  // Im(a'^2 + b' c'), must vanish
};

RealityConstraints reality_constraints(const QuasiHermitianOp& op);

/// Case2 positivity discriminant
///   (|lambda|^2 [Re(a')^2 - 2 w Re(a') / r] + s w^2 / r) / (r s - |lambda|^2)
/// evaluated in its unfactored form. Non-negative for all inputs.
double positivity_discriminant(const CaseCoefficients& cc, const Case2Params& p);

struct Irreducibility {
    bool irreducible = false;
    /// (b c' - c b')^2 - 4 (a b' - b a')(a c' - c a'), equal to
    /// -det([H0, H0']).
    Complex delta{};
    double threshold = 0.0;
};

/// Irreducible iff |delta| > tol * max(||H0||, ||H0'||)^4.
Irreducibility irreducibility_test(const QuasiHermitianOp& h, const QuasiHermitianOp& hp, double tol = kAcceptTol);

enum class PairRoute {
    HalfAngleZero,   // zeta = 0: linear equation from c' = (s / r) b'*
    RealAngleUnit,   // theta real, lambda = 0: u = 1
    Case2Linear,     // 2x2 real system for (u, w)
    SpectralBasis,   // fallback: weights of the two H0^dagger eigenprojectors
};

const char* to_string(PairRoute r);

struct PairMetric {
    double u = 1.0;
    std::optional<double> w;  // only on the Case2Linear route
    MetricOperator eta;       // k = 1
    PairRoute route = PairRoute::Case2Linear;
};

/// Recovers the metric (up to scale) fixed by an irreducible compatible
/// pair. Throws DegeneratePair for reducible pairs and NoCompatibleMetric
/// when no positive u makes both operators pseudo-Hermitian.
PairMetric metric_from_pair(const QuasiHermitianOp& h, const QuasiHermitianOp& hp, double tol = kAcceptTol);

struct Hermitized {
    Mat2 rho;  // eta^{-1/2}
    Mat2 h;    // rho^{-1} H rho
};

/// Throws NotCompatible unless H is pseudo-Hermitian with respect to eta.
Hermitized hermitize(const QuasiHermitianOp& h, const MetricOperator& eta, double tol = kAcceptTol);

/// eta^{-1/2} herm eta^{1/2} + q I for a Hermitian `herm`: the general
/// compatible partner, independent of any angle form.
QuasiHermitianOp compatible_from_hermitian(const MetricOperator& eta, const Mat2& herm, double q = 0.0);

}  // namespace qh2
