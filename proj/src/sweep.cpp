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

#include "qh2/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qh2/error.hpp"
#include "qh2/metric.hpp"
#include "qh2/observables.hpp"
#include "qh2/oracle.hpp"
#include "qh2/sampling.hpp"

namespace qh2::sweep {

namespace {

constexpr double kPi = std::numbers::pi;

template <class Sample, class Fn>
std::vector<Sample> evaluate(std::size_t n, Execution ex, Fn&& fn) {
    std::vector<Sample> out(n);
    const auto count = static_cast<std::int64_t>(n);
    if (ex == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
    } else {
        for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
    }
    return out;
}

double draw(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// (0, hi]
double draw_positive(Rng& rng, double hi) { return hi - draw(rng, 0.0, hi); }

double rel(const Mat2& diff, double scale) { return frobenius_norm(diff) / std::max(scale, 1e-300); }

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ZetaResult zeta_identity(std::size_t n, std::uint64_t seed, Execution ex) {
    const auto errors = evaluate<double>(n, ex, [seed](std::uint64_t i) {
        Rng rng = stream(seed, i);
        double re = draw(rng, 0.0, kPi);
        while (re == 0.0) re = draw(rng, 0.0, kPi);
        const Complex theta(re, draw(rng, -2.0, 2.0));
        const Complex zeta = metric_coefficients(theta).zeta;
        const Complex expected = 0.5 * Complex(std::sin(theta.real()), std::sinh(theta.imag()));
        return std::abs(zeta - expected);
    });
    ZetaResult r;
    r.samples = n;
    for (double e : errors) r.max_abs_error = std::max(r.max_abs_error, e);
    return r;
}

MetricResult metric_validity(std::size_t n, std::uint64_t seed, Execution ex) {
    struct Sample {
        bool pd = true;
        double herm = 0.0, intertwine = 0.0, gap = 0.0, spectral = 0.0;
    };
    const auto samples = evaluate<Sample>(n, ex, [seed](std::uint64_t i) {
        Rng rng = stream(seed, i);
        const AngleForm af = random_angle_form(rng);
        const MetricParams p{draw_positive(rng, 10.0), draw_positive(rng, 10.0)};
        const MetricOperator eta = build_metric(af, p);
        const Mat2& m = eta.matrix;
        const double m_norm = frobenius_norm(m);
        const Mat2 h0 = from_angle_form(af).traceless();

        Sample s;
        s.pd = m.trace().real() > 0.0 && m.det().real() > 0.0;
        s.herm = hermiticity_defect(m) / m_norm;
        s.intertwine = rel(h0.adjoint() * m - m * h0, frobenius_norm(h0) * m_norm);
        const CaseCoefficients cc = case_coefficients(af, p.u);
        const double expected_gap = std::exp(2.0 * af.phi.imag()) * p.u;
        s.gap = std::abs(cc.r * cc.s - std::norm(cc.lambda) - expected_gap) / expected_gap;
        const auto [v1, v2] = adjoint_eigenvectors(af, std::sqrt(p.k * p.u), std::sqrt(p.k));
        s.spectral = rel(m - (outer(v1, v1) + outer(v2, v2)), m_norm);
        return s;
    });
    MetricResult r;
    r.samples = n;
    for (const auto& s : samples) {
        r.not_positive_definite += s.pd ? 0 : 1;
        r.max_hermiticity = std::max(r.max_hermiticity, s.herm);
        r.max_intertwining = std::max(r.max_intertwining, s.intertwine);
        r.max_gap_identity = std::max(r.max_gap_identity, s.gap);
        r.max_spectral_form = std::max(r.max_spectral_form, s.spectral);
    }
    return r;
}

ObservableResult observable_constraints(std::size_t n, std::uint64_t seed, Execution ex) {
    struct Sample {
        bool failed = false;
        bool pseudo_ok = true;
        ObservableCase label = ObservableCase::Case1;
        double im = 0.0, re = 0.0, residual = 0.0;
        double discriminant = std::numeric_limits<double>::infinity();
    };
    const auto samples = evaluate<Sample>(n, ex, [seed](std::uint64_t i) {
        Rng rng = stream(seed, i);
        AngleForm af = random_angle_form(rng);
        double u = draw_positive(rng, 10.0);
        if (i % 2 == 0) {
            if (i % 4 == 0) {
                af.theta = 0.0;
            } else {
                af.theta = af.theta.real();
                u = 1.0;
            }
        }
        Sample s;
        try {
            const CaseCoefficients cc = case_coefficients(af, u);
            const ObservableFreeParams fp = random_free_params(rng, cc.label);
            const CompatibleObservable obs = construct_compatible(af, u, fp);
            s.label = obs.label;
            const RealityConstraints rc = reality_constraints(obs.op);
            s.im = std::abs(rc.im_part);
            s.re = rc.re_part;
            const Mat2 op = obs.op.matrix();
            std::array<double, 6> ks{1.0};
            for (std::size_t j = 1; j < ks.size(); ++j) ks[j] = draw_positive(rng, 10.0);
            for (double k : ks) {
                const MetricOperator eta = build_metric(af, {k, u});
                const auto ph = check_pseudo_hermitian(op, eta, kAcceptTol);
                s.pseudo_ok = s.pseudo_ok && ph.holds;
                s.residual = std::max(s.residual, ph.residual / (frobenius_norm(eta.matrix) * frobenius_norm(op)));
            }
            if (const auto* p2 = std::get_if<Case2Params>(&fp.params)) s.discriminant = positivity_discriminant(cc, *p2);
        } catch (const Error&) {
            s.failed = true;
        }
        return s;
    });
    ObservableResult r;
    r.samples = n;
    r.min_re = std::numeric_limits<double>::infinity();
    r.min_positivity_discriminant = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        if (s.failed) {
            ++r.construction_failures;
            continue;
        }
        (s.label == ObservableCase::Case1 ? r.case1 : r.case2) += 1;
        r.not_pseudo_hermitian += s.pseudo_ok ? 0 : 1;
        r.max_abs_im = std::max(r.max_abs_im, s.im);
        r.min_re = std::min(r.min_re, s.re);
        r.max_pseudo_residual = std::max(r.max_pseudo_residual, s.residual);
        r.min_positivity_discriminant = std::min(r.min_positivity_discriminant, s.discriminant);
    }
    return r;
}

UniquenessResult uniqueness(std::size_t n, std::uint64_t seed, Execution ex) {
    struct Sample {
        bool refused = false, pair_dim_ok = true, single_dim_ok = true, family_ok = true;
        double u_err = 0.0, family_dev = 0.0, pair_dev = 0.0;
    };
    const auto samples = evaluate<Sample>(n, ex, [seed](std::uint64_t i) {
        Rng rng = stream(seed, i);
        Sample s;
        for (;;) {
            AngleForm af = random_angle_form(rng);
            double u = draw_positive(rng, 10.0);
            if (i % 4 == 0) {
                if (i % 8 == 0) {
                    af.theta = 0.0;
                    af.phi = 0.0;  // phi is not recoverable from a diagonal H
                } else {
                    af.theta = af.theta.real();
                    u = 1.0;
                }
            }
            QuasiHermitianOp h = from_angle_form(af);
            h.q = draw(rng, -1.0, 1.0);
            const CaseCoefficients cc = case_coefficients(af, u);
            QuasiHermitianOp hp;
            try {
                hp = construct_compatible(af, u, random_free_params(rng, cc.label)).op;
            } catch (const Error&) {
                continue;
            }
            // Stay clear of the reducible set so rank decisions are well posed.
            const Irreducibility irr = irreducibility_test(h, hp);
            if (std::abs(irr.delta) <= 1e3 * irr.threshold) continue;

            try {
                const PairMetric pm = metric_from_pair(h, hp);
                s.u_err = std::abs(pm.u - u) / u;
            } catch (const Error&) {
                s.refused = true;
            }
            const std::array<Mat2, 2> pair{h.matrix(), hp.matrix()};
            s.pair_dim_ok = oracle::intertwiner_space(pair).kernel_basis.size() == 1;
            const auto single = oracle::cross_validate(h, std::nullopt);
            s.single_dim_ok = single.kernel_dim == 2;
            s.family_ok = single.pass;
            s.family_dev = single.max_deviation;
            if (!s.refused) {
                const auto joint = oracle::cross_validate(h, hp);
                s.pair_dev = joint.max_deviation;
                s.family_ok = s.family_ok && joint.pass;
            }
            return s;
        }
    });
    UniquenessResult r;
    r.samples = n;
    for (const auto& s : samples) {
        r.refused += s.refused ? 1 : 0;
        r.pair_kernel_not_one += s.pair_dim_ok ? 0 : 1;
        r.single_kernel_not_two += s.single_dim_ok ? 0 : 1;
        r.family_mismatch += s.family_ok ? 0 : 1;
        r.max_u_rel_error = std::max(r.max_u_rel_error, s.u_err);
        r.max_family_deviation = std::max(r.max_family_deviation, s.family_dev);
        r.max_pair_deviation = std::max(r.max_pair_deviation, s.pair_dev);
    }
    return r;
}

}  // namespace qh2::sweep
