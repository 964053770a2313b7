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

#include "qh2/observables.hpp"

#include <cmath>

#include "qh2/error.hpp"

namespace qh2 {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_u(double u) {
    if (!(u > 0.0) || !std::isfinite(u)) throw Error(ErrorCode::InvalidArgument, "u must be positive and finite");
}

// Weights (alpha, beta) with eta = alpha P+ + beta P- intertwining hp.
std::optional<double> spectral_weight_ratio(const std::pair<Vec2, Vec2>& basis, const Mat2& hp) {
    const Mat2 p_plus = outer(basis.first, basis.first);
    const Mat2 p_minus = outer(basis.second, basis.second);
    const Mat2 r_plus = hp.adjoint() * p_plus - p_plus * hp;
    const Mat2 r_minus = hp.adjoint() * p_minus - p_minus * hp;

    RealLinearSystem sys;
    sys.n_unknowns = 2;
    for (std::size_t e = 0; e < 4; ++e) {
        sys.rows.push_back({r_plus.m[e].real(), r_minus.m[e].real()});
        sys.rows.push_back({r_plus.m[e].imag(), r_minus.m[e].imag()});
    }
    const LinearSolution sol = solve_real_linear(sys);
    if (sol.kernel.size() != 1) return std::nullopt;
    double alpha = sol.kernel[0][0];
    double beta = sol.kernel[0][1];
    if (beta < 0.0) {
        alpha = -alpha;
        beta = -beta;
    }
    if (!(alpha > 0.0) || !(beta > 0.0)) return std::nullopt;
    return alpha / beta;
}

}  // namespace

const char* to_string(ObservableCase c) { return c == ObservableCase::Case1 ? "case1" : "case2"; }

const char* to_string(PairRoute r) {
    switch (r) {
        case PairRoute::HalfAngleZero: return "half-angle-zero";
        case PairRoute::RealAngleUnit: return "real-angle-unit";
        case PairRoute::Case2Linear: return "case2-linear";
        case PairRoute::SpectralBasis: return "spectral-basis";
    }
    return "unknown";
}

CaseCoefficients case_coefficients(const AngleForm& af, double u) {
    require_u(u);
    CaseCoefficients cc;
    cc.coeffs = metric_coefficients(af.theta);
    const auto& co = cc.coeffs;
    cc.lambda = std::exp(kI * std::conj(af.phi)) * (u * std::conj(co.zeta) - co.zeta);
    cc.r = std::exp(2.0 * af.phi.imag()) * (co.mA + co.mB * u);
    cc.s = co.mA * u + co.mB;

    const double lambda_tol = kSelfCheckTol * std::max(1.0, std::abs(co.zeta) * (1.0 + u));
    cc.label = std::abs(cc.lambda) <= lambda_tol ? ObservableCase::Case1 : ObservableCase::Case2;

    const bool zeta_zero = std::abs(co.zeta) <= kSelfCheckTol;
    const bool real_unit = std::abs(af.theta.imag()) <= kSelfCheckTol && std::abs(u - 1.0) <= kSelfCheckTol;
    cc.structural_label = (zeta_zero || real_unit) ? ObservableCase::Case1 : ObservableCase::Case2;
    return cc;
}

CompatibleObservable construct_compatible(const AngleForm& af, double u, const ObservableFreeParams& params) {
    const CaseCoefficients cc = case_coefficients(af, u);
    const bool wants_case1 = std::holds_alternative<Case1Params>(params.params);
    if (wants_case1 != (cc.label == ObservableCase::Case1))
        throw Error(ErrorCode::CaseMismatch,
                    std::string("free parameters are for the other case; computed ") + to_string(cc.label));

    CompatibleObservable out;
    out.generated_from = params;
    out.label = cc.label;
    out.u_used = u;
    out.op.q = params.q;

    if (const auto* p1 = std::get_if<Case1Params>(&params.params)) {
        out.op.a = p1->re_a;
        out.op.b = p1->b;
        out.op.c = (cc.s / cc.r) * std::conj(p1->b);
    } else {
        const auto& p2 = std::get<Case2Params>(params.params);
        const double re_a = p2.a.real();
        const double im_a = p2.a.imag();
        out.op.a = p2.a;
        out.op.b = (p2.w + kI * cc.r * im_a) / cc.lambda;
        out.op.c = (cc.s * p2.w - 2.0 * std::norm(cc.lambda) * re_a - kI * cc.r * cc.s * im_a) /
                   (cc.r * std::conj(cc.lambda));
    }

    const RealityConstraints rc = reality_constraints(out.op);
    const double scale = std::max(1.0, std::norm(out.op.a) + std::abs(out.op.b) * std::abs(out.op.c));
    if (std::abs(rc.im_part) > kSelfCheckTol * scale || rc.re_part < -kSelfCheckTol * scale)
        throw Error(ErrorCode::PostconditionFailed, "compatible observable violates the reality constraints");
    const auto ph = check_pseudo_hermitian(out.op.matrix(), build_metric(af, {1.0, u}), kSelfCheckTol);
    if (!ph.holds)
        throw Error(ErrorCode::PostconditionFailed, "compatible observable is not pseudo-Hermitian");
    return out;
}

RealityConstraints reality_constraints(const QuasiHermitianOp& op) {
    const Complex d = op.discriminant();
    return {d.real(), d.imag()};
}

double positivity_discriminant(const CaseCoefficients& cc, const Case2Params& p) {
    const double lam2 = std::norm(cc.lambda);
    const double re_a = p.a.real();
    const double numerator = lam2 * (re_a * re_a - 2.0 * p.w * re_a / cc.r) + cc.s * p.w * p.w / cc.r;
    return numerator / (cc.r * cc.s - lam2);
}

Irreducibility irreducibility_test(const QuasiHermitianOp& h, const QuasiHermitianOp& hp, double tol) {
    const Complex x = h.b * hp.c - h.c * hp.b;
    const Complex y = h.a * hp.b - h.b * hp.a;
    const Complex z = h.a * hp.c - h.c * hp.a;
    Irreducibility out;
    out.delta = x * x - 4.0 * y * z;
    const double scale = std::max(frobenius_norm(h.traceless()), frobenius_norm(hp.traceless()));
    out.threshold = tol * std::pow(scale, 4);
    out.irreducible = std::abs(out.delta) > out.threshold;
    return out;
}

PairMetric metric_from_pair(const QuasiHermitianOp& h, const QuasiHermitianOp& hp, double tol) {
    if (!irreducibility_test(h, hp, tol).irreducible)
        throw Error(ErrorCode::DegeneratePair, "pair shares an eigenvector; the metric is not unique");

    auto finish = [&](double u, PairRoute route, std::optional<double> w) {
        if (!std::isfinite(u) || !(u > 0.0))
            throw Error(ErrorCode::NoCompatibleMetric, "recovered u is not positive");
        PairMetric out{u, w, build_metric(h, {1.0, u}), route};
        if (!check_pseudo_hermitian(h.matrix(), out.eta, tol).holds ||
            !check_pseudo_hermitian(hp.matrix(), out.eta, tol).holds)
            throw Error(ErrorCode::NoCompatibleMetric, "no metric of the family renders both operators pseudo-Hermitian");
        return out;
    };
    auto spectral = [&]() {
        const auto ratio = spectral_weight_ratio(metric_basis(h), hp.traceless());
        if (!ratio) throw Error(ErrorCode::NoCompatibleMetric, "no positive metric weights intertwine the partner");
        return finish(*ratio, PairRoute::SpectralBasis, std::nullopt);
    };

    if (h.is_triangular()) return spectral();

    const AngleForm af = to_angle_form(h);
    const MetricCoefficients co = metric_coefficients(af.theta);
    const double growth = std::exp(2.0 * af.phi.imag());

    if (std::abs(co.zeta) <= kSelfCheckTol) {
        // c' r = s b'*, linear in u.
        const Complex b_conj = std::conj(hp.b);
        const Complex coef = hp.c * growth * co.mB - co.mA * b_conj;
        const Complex rhs = co.mB * b_conj - hp.c * growth * co.mA;
        if (coef == Complex(0.0)) return spectral();
        const Complex u = rhs / coef;
        if (std::abs(u.imag()) > mixed_tol(tol, std::abs(u)))
            throw Error(ErrorCode::NoCompatibleMetric, "recovered u is not real");
        return finish(u.real(), PairRoute::HalfAngleZero, std::nullopt);
    }

    // lambda b' = w + i r Im(a') with lambda, r linear in u; unknowns (u, w).
    const Complex beta = hp.b * std::exp(kI * std::conj(af.phi));
    const Complex with_u = beta * std::conj(co.zeta);
    const Complex without_u = beta * co.zeta;
    const double im_a = hp.a.imag();
    RealLinearSystem sys;
    sys.n_unknowns = 2;
    sys.rows = {{with_u.real(), -1.0}, {with_u.imag() - growth * co.mB * im_a, 0.0}};
    sys.rhs = {without_u.real(), without_u.imag() + growth * co.mA * im_a};
    LinearSolution sol;
    try {
        sol = solve_real_linear(sys);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Inconsistent) throw;
        throw Error(ErrorCode::NoCompatibleMetric, "no u satisfies the compatibility equation for b'");
    }
    if (sol.unique()) return finish((*sol.particular)[0], PairRoute::Case2Linear, (*sol.particular)[1]);
    if (std::abs(af.theta.imag()) <= kSelfCheckTol) return finish(1.0, PairRoute::RealAngleUnit, std::nullopt);
    return spectral();
}

Hermitized hermitize(const QuasiHermitianOp& h, const MetricOperator& eta, double tol) {
    const Mat2 hm = h.matrix();
    if (!check_pseudo_hermitian(hm, eta, tol).holds)
        throw Error(ErrorCode::NotCompatible, "operator is not pseudo-Hermitian with respect to the metric");
    const Mat2 root = pd_sqrt(eta.matrix);
    const Mat2 rho = root.inverse();
    Hermitized out{rho, root * hm * rho};
    if (hermiticity_defect(out.h) > tol * std::max(1.0, frobenius_norm(out.h)))
        throw Error(ErrorCode::PostconditionFailed, "hermitized operator is not Hermitian");
    return out;
}

QuasiHermitianOp compatible_from_hermitian(const MetricOperator& eta, const Mat2& herm, double q) {
    if (hermiticity_defect(herm) > mixed_tol(kHermitianTol, frobenius_norm(herm)))
        throw Error(ErrorCode::InvalidArgument, "seed operator is not Hermitian");
    const Mat2 root = pd_sqrt(eta.matrix);
    return validate_quasi_hermitian(root.inverse() * herm * root + q * Mat2::identity());
}

}  // namespace qh2
