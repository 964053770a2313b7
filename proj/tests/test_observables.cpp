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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qh2/error.hpp"
#include "qh2/observables.hpp"
#include "qh2/sampling.hpp"
#include "support.hpp"

using namespace qh2;
using qh2::test::kI;

namespace {

constexpr double kPi = std::numbers::pi;
const AngleForm kWorked{2.0, kPi / 2, -kI * std::log(2.0)};
const QuasiHermitianOp kH{0.0, 0.0, 1.0, 4.0};
const QuasiHermitianOp kHp{0.0, kI, 4.0 + 1.5 * kI, 16.0 - 6.0 * kI};

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

std::array<double, 2> sorted_real(const Mat2& m) {
    const Eigen2 e = eigen2(m);
    std::array<double, 2> v{e.values[0].real(), e.values[1].real()};
    std::sort(v.begin(), v.end());
    return v;
}

// Random quasi-Hermitian operator V diag(l1, l2) V^{-1} with V's first column fixed.
QuasiHermitianOp with_eigenvector(Rng& rng, const Vec2& v) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    const Vec2 w{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    const Mat2 vm{v[0], w[0], v[1], w[1]};
    const Mat2 m = vm * Mat2::diag(d(rng), d(rng)) * vm.inverse();
    return validate_quasi_hermitian(m);
}

}  // namespace

TEST_SUITE("observables") {

TEST_CASE("case_coefficients examples") {
    const CaseCoefficients z = case_coefficients({1.0, 0.0, Complex(0.3, -0.2)}, 3.0);
    CHECK(z.lambda == Complex(0.0));
    CHECK(z.label == ObservableCase::Case1);
    CHECK(z.structural_label == ObservableCase::Case1);

    const CaseCoefficients r = case_coefficients({1.0, kPi / 3, 0.0}, 1.0);
    CHECK(std::abs(r.lambda) < 1e-15);
    CHECK(r.label == ObservableCase::Case1);
    CHECK(r.structural_label == ObservableCase::Case1);

    const CaseCoefficients w = case_coefficients(kWorked, 2.0);
    CHECK(test::close(w.lambda, 0.25, 1e-14));
    CHECK(w.r == doctest::Approx(0.375));
    CHECK(w.s == doctest::Approx(1.5));
    CHECK(w.label == ObservableCase::Case2);
    CHECK(w.structural_label == ObservableCase::Case2);
}

TEST_CASE("case labels: |lambda| route agrees with the structural route") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        Rng rng = stream(606, i);
        AngleForm af = random_angle_form(rng);
        double u = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
        if (i % 3 == 0) af.theta = af.theta.real();
        if (i % 5 == 0) u = 1.0;
        if (i % 7 == 0) af.theta = 0.0;
        const CaseCoefficients cc = case_coefficients(af, u);
        CHECK(cc.label == cc.structural_label);
    }
}

TEST_CASE("construct_compatible examples") {
    SUBCASE("Case1 with Hermitian H gives a Hermitian partner") {
        const auto obs = construct_compatible({1.0, kPi / 2, 0.0}, 1.0, {Case1Params{1.0, kI}, 0.0});
        CHECK(obs.label == ObservableCase::Case1);
        CHECK(test::close(obs.op.c, -kI, 1e-14));
        CHECK(hermiticity_defect(obs.op.matrix()) < 1e-14);
    }
    SUBCASE("Case1 with theta = 0") {
        const auto obs = construct_compatible({1.0, 0.0, 0.0}, 2.0, {Case1Params{0.0, 1.0}, 0.0});
        CHECK(test::close(obs.op.c, 2.0, 1e-14));
        const Mat2 h = obs.op.matrix();
        const Mat2 eta = Mat2::diag(2.0, 1.0);
        CHECK(test::max_abs_diff(h.adjoint() * eta, eta * h) == 0.0);
    }
    SUBCASE("worked Case2 partner") {
        const auto obs = construct_compatible(kWorked, 2.0, {Case2Params{kI, 1.0}, 0.0});
        CHECK(obs.label == ObservableCase::Case2);
        CHECK(test::close(obs.op.b, 4.0 + 1.5 * kI, 1e-13));
        CHECK(test::close(obs.op.c, 16.0 - 6.0 * kI, 1e-13));
        CHECK(test::close(obs.op.discriminant(), 72.0, 1e-13));
        const Mat2 h = obs.op.matrix();
        const Mat2 eta{1.5, 0.25, 0.25, 0.375};
        // Both sides of the intertwining relation, multiplied out by hand.
        const Mat2 expected{4.0, 6.0 + 2.0 * kI, 6.0 - 2.0 * kI, 1.0};
        CHECK(test::close(h.adjoint() * eta, expected, 1e-14));
        CHECK(test::close(eta * h, expected, 1e-14));
    }
    SUBCASE("q' is carried through") {
        const auto obs = construct_compatible(kWorked, 2.0, {Case2Params{kI, 1.0}, -0.75});
        CHECK(obs.op.q == -0.75);
        CHECK(obs.u_used == 2.0);
    }
}

TEST_CASE("construct_compatible rejects the wrong case") {
    CHECK(code_of([] { construct_compatible(kWorked, 2.0, {Case1Params{1.0, 1.0}, 0.0}); }) ==
          ErrorCode::CaseMismatch);
    CHECK(code_of([] { construct_compatible({1.0, 0.0, 0.0}, 2.0, {Case2Params{1.0, 1.0}, 0.0}); }) ==
          ErrorCode::CaseMismatch);
}

TEST_CASE("reality_constraints examples") {
    const auto a = reality_constraints({0.0, 1.0, kI, -kI});
    CHECK(a.re_part == doctest::Approx(2.0));
    CHECK(a.im_part == doctest::Approx(0.0));

    const auto b = reality_constraints(kHp);
    CHECK(b.re_part == doctest::Approx(72.0));
    CHECK(std::abs(b.im_part) < 1e-12);

    const auto c = reality_constraints({0.0, 0.0, 1.0, -1.0});
    CHECK(c.re_part == doctest::Approx(-1.0));
    CHECK(c.im_part == 0.0);
}

TEST_CASE("irreducibility_test examples") {
    const Irreducibility prop = irreducibility_test(kH, {0.0, 0.0, 4.0, 16.0});
    CHECK_FALSE(prop.irreducible);
    CHECK(prop.delta == Complex(0.0));

    const QuasiHermitianOp any{0.3, 1.0 - kI, 2.0, kI};
    const QuasiHermitianOp scaled{-1.0, 2.5 * any.a, 2.5 * any.b, 2.5 * any.c};
    CHECK(std::abs(irreducibility_test(any, scaled).delta) < 1e-12);
    CHECK_FALSE(irreducibility_test(any, scaled).irreducible);

    const Irreducibility w = irreducibility_test(kH, kHp);
    CHECK(w.irreducible);
    CHECK(test::close(w.delta, -128.0, 1e-14));
}

TEST_CASE("delta is minus the commutator determinant") {
    std::mt19937_64 rng(707);
    for (int t = 0; t < 10000; ++t) {
        const QuasiHermitianOp h{0.0, test::random_complex(rng), test::random_complex(rng), test::random_complex(rng)};
        const QuasiHermitianOp hp{0.0, test::random_complex(rng), test::random_complex(rng), test::random_complex(rng)};
        const Complex det = commutator(h.matrix(), hp.matrix()).det();
        const Complex delta = irreducibility_test(h, hp).delta;
        CHECK(std::abs(delta + det) <= 1e-10 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("irreducibility matches the shared-eigenvector criterion") {
    int shared = 0, independent = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        Rng rng = stream(808, i);
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        const Vec2 v{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
        const QuasiHermitianOp h = with_eigenvector(rng, v);
        const QuasiHermitianOp hp =
            i % 2 == 0 ? with_eigenvector(rng, v)
                       : with_eigenvector(rng, Vec2{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))});

        const Eigen2 e1 = eigen2(h.matrix());
        const Eigen2 e2 = eigen2(hp.matrix());
        double min_wedge = 1.0;
        for (const auto& x : e1.vectors)
            for (const auto& y : e2.vectors) min_wedge = std::min(min_wedge, std::abs(x[0] * y[1] - x[1] * y[0]));

        const Irreducibility irr = irreducibility_test(h, hp);
        const double scale4 = irr.threshold / kAcceptTol;
        const double rel_delta = std::abs(irr.delta) / scale4;
        // Margin bands around both decision thresholds.
        if (rel_delta > 1e-10 && rel_delta < 1e-8) continue;
        if (min_wedge > 1e-10 && min_wedge < 1e-8) continue;
        const bool shares = min_wedge <= 1e-9;
        CHECK(irr.irreducible == !shares);
        (shares ? shared : independent) += 1;
    }
    CHECK(shared > 4000);
    CHECK(independent > 4000);
}

TEST_CASE("metric_from_pair examples") {
    SUBCASE("two Hermitian operators give the identity metric") {
        const auto pm = metric_from_pair({0.0, 0.0, 1.0, 1.0}, {0.0, 1.0, kI, -kI});
        CHECK(pm.u == doctest::Approx(1.0));
        CHECK(test::close(pm.eta.matrix, Mat2::identity(), 1e-12));
    }
    SUBCASE("theta = 0 solves for u linearly") {
        const auto pm = metric_from_pair({0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 2.0});
        CHECK(pm.route == PairRoute::HalfAngleZero);
        CHECK(pm.u == doctest::Approx(2.0));
        CHECK(test::close(pm.eta.matrix, Mat2::diag(2.0, 1.0), 1e-14));
    }
    SUBCASE("worked Case2 pair") {
        const auto pm = metric_from_pair(kH, kHp);
        CHECK(pm.route == PairRoute::Case2Linear);
        CHECK(pm.u == doctest::Approx(2.0).epsilon(1e-12));
        REQUIRE(pm.w);
        CHECK(*pm.w == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(test::close(pm.eta.matrix, Mat2{1.5, 0.25, 0.25, 0.375}, 1e-12));
    }
    SUBCASE("real theta with a partner compatible only at u = 1") {
        // H0 = sigma_1 and H0' = sigma_3: b' = 0 leaves the (u, w) system singular.
        const auto pm = metric_from_pair({0.0, 0.0, 1.0, 1.0}, {0.0, 1.0, 0.0, 0.0});
        CHECK(pm.route == PairRoute::RealAngleUnit);
        CHECK(pm.u == 1.0);
    }
}

TEST_CASE("metric_from_pair refusals") {
    CHECK(code_of([] { metric_from_pair(kH, {0.0, 0.0, 4.0, 16.0}); }) == ErrorCode::DegeneratePair);
    CHECK(code_of([] { metric_from_pair(kH, {1.0, 0.0, 0.0, 0.0}); }) == ErrorCode::DegeneratePair);
    // sigma_1 would need eta00 = eta11, impossible in the family of [[0, 1], [4, 0]].
    CHECK(code_of([] { metric_from_pair(kH, {0.0, 0.0, 1.0, 1.0}); }) == ErrorCode::NoCompatibleMetric);
}

TEST_CASE("metric_from_pair for triangular H and the singular Case2 fallback") {
    const QuasiHermitianOp upper = validate_quasi_hermitian(Mat2{1.0, 1.0 + kI, 0.0, -1.0});
    const MetricOperator eta = build_metric(upper, {1.0, 3.0});
    const QuasiHermitianOp hp = compatible_from_hermitian(eta, Mat2{0.2, 1.0 - 0.5 * kI, 1.0 + 0.5 * kI, -0.2}, 0.4);
    REQUIRE(irreducibility_test(upper, hp).irreducible);
    const auto pm = metric_from_pair(upper, hp);
    CHECK(pm.route == PairRoute::SpectralBasis);
    CHECK(pm.u == doctest::Approx(3.0).epsilon(1e-10));

    // Complex theta, real a' and w = 0 force b' = 0: the (u, w) system is singular.
    const AngleForm af{1.3, Complex(1.1, 0.4), Complex(0.7, -0.3)};
    const auto obs = construct_compatible(af, 2.5, {Case2Params{0.8, 0.0}, 0.0});
    CHECK(std::abs(obs.op.b) < 1e-14);
    const auto fb = metric_from_pair(from_angle_form(af), obs.op);
    CHECK(fb.route == PairRoute::SpectralBasis);
    CHECK(fb.u == doctest::Approx(2.5).epsilon(1e-10));
}

TEST_CASE("hermitize examples") {
    const QuasiHermitianOp herm{0.5, 1.0, 2.0 - kI, 2.0 + kI};
    const Hermitized id = hermitize(herm, MetricOperator{});
    CHECK(test::close(id.rho, Mat2::identity(), 1e-15));
    CHECK(test::close(id.h, herm.matrix(), 1e-15));

    const Hermitized d = hermitize(kH, MetricOperator::from_matrix(Mat2::diag(1.0, 0.25)));
    CHECK(test::close(d.h, Mat2{0.0, 2.0, 2.0, 0.0}, 1e-14));

    const Hermitized w = hermitize(kH, MetricOperator::from_matrix(Mat2{1.5, 0.25, 0.25, 0.375}));
    CHECK(hermiticity_defect(w.h) <= 1e-12 * frobenius_norm(w.h));
    const auto ev = sorted_real(w.h);
    CHECK(ev[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));

    CHECK(code_of([] { hermitize(kH, MetricOperator{}); }) == ErrorCode::NotCompatible);
}

TEST_CASE("random compatible observables satisfy the reality constraints") {
    for (std::uint64_t i = 0; i < 20000; ++i) {
        Rng rng = stream(909, i);
        AngleForm af = random_angle_form(rng);
        double u = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
        if (i % 4 == 0) af.theta = 0.0;
        if (i % 4 == 1) {
            af.theta = af.theta.real();
            u = 1.0;
        }
        const CaseCoefficients cc = case_coefficients(af, u);
        const ObservableFreeParams fp = random_free_params(rng, cc.label);
        const CompatibleObservable obs = construct_compatible(af, u, fp);
        const RealityConstraints rc = reality_constraints(obs.op);
        CHECK(std::abs(rc.im_part) <= 1e-10 * std::max(1.0, std::abs(rc.re_part)));
        CHECK(rc.re_part >= -1e-10);
        if (const auto* p2 = std::get_if<Case2Params>(&fp.params)) CHECK(positivity_discriminant(cc, *p2) >= -1e-12);
        for (int j = 0; j < 5; ++j) {
            const double k = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
            CHECK(check_pseudo_hermitian(obs.op.matrix(), build_metric(af, {k, u})).holds);
        }
        CHECK(validate_quasi_hermitian(obs.op.matrix()).q == doctest::Approx(fp.q));
    }
}

TEST_CASE("generated irreducible pairs recover u") {
    int checked = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        Rng rng = stream(1010, i);
        const AngleForm af = random_angle_form(rng);
        const double u = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
        const auto obs = construct_compatible(af, u, random_free_params(rng, ObservableCase::Case2));
        const QuasiHermitianOp h = from_angle_form(af);
        const Irreducibility irr = irreducibility_test(h, obs.op);
        if (std::abs(irr.delta) < 1e3 * irr.threshold) continue;
        const auto pm = metric_from_pair(h, obs.op);
        CHECK(std::abs(pm.u - u) <= 1e-9 * u);
        ++checked;
    }
    CHECK(checked > 1900);
}

TEST_CASE("hermitization preserves the spectrum") {
    for (std::uint64_t i = 0; i < 5000; ++i) {
        Rng rng = stream(1111, i);
        const AngleForm af = random_angle_form(rng);
        QuasiHermitianOp h = from_angle_form(af);
        h.q = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
        const double u = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
        const Hermitized out = hermitize(h, build_metric(af, {1.0, u}));
        CHECK(hermiticity_defect(out.h) <= 1e-9 * frobenius_norm(out.h));
        const auto a = sorted_real(h.matrix());
        const auto b = sorted_real(out.h);
        const double scale = std::max(std::abs(a[0]), std::abs(a[1]));
        CHECK(std::abs(a[0] - b[0]) <= 1e-10 * scale);
        CHECK(std::abs(a[1] - b[1]) <= 1e-10 * scale);
    }
}

TEST_CASE("compatible_from_hermitian produces pseudo-Hermitian partners") {
    const MetricOperator eta = build_metric(kWorked, {1.0, 2.0});
    const QuasiHermitianOp hp = compatible_from_hermitian(eta, Mat2{1.0, kI, -kI, -1.0}, 0.5);
    CHECK(check_pseudo_hermitian(hp.matrix(), eta).holds);
    CHECK(hp.q == doctest::Approx(0.5));
    CHECK(code_of([&] { compatible_from_hermitian(eta, Mat2{0.0, 1.0, 0.0, 0.0}); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE
