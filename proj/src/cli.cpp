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

#include "qh2/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qh2/error.hpp"
#include "qh2/metric.hpp"
#include "qh2/observables.hpp"
#include "qh2/oracle.hpp"
#include "qh2/quasi.hpp"
#include "qh2/sampling.hpp"

namespace qh2::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kConventions =
    "Complex numbers are [re, im] pairs; theta and phi are {\"re\": x, \"im\": y}.\n"
    "Angle branches: theta = principal arccos(a/E), folded so Re(theta) lies in [0, pi];\n"
    "phi = (1/2i) log(c/b) on the principal branch, shifted by pi when needed so that\n"
    "b = E e^{-i phi} sin(theta), then wrapped to Re(phi) in [0, 2 pi). E = 0 gives\n"
    "theta = phi = 0, and phi = 0 whenever sin(theta) = 0.\n"
    "Exit codes: 0 success or true verdict, 1 false verdict or refusal, 2 malformed input.\n"
    "QH2_TOL overrides the default accept/reject tolerance 1e-9.";

// Malformed input: exit code 2.
struct Malformed : std::runtime_error {
    Malformed(std::string code, const std::string& detail) : std::runtime_error(detail), code(std::move(code)) {}
    std::string code;
};

struct Outcome {
    int exit_code = kOk;
    json body;
};

json cplx(Complex z) { return json::array({z.real(), z.imag()}); }

json angle(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json mat(const Mat2& m) {
    return json::array({json::array({cplx(m(0, 0)), cplx(m(0, 1))}), json::array({cplx(m(1, 0)), cplx(m(1, 1))})});
}

json op_json(const QuasiHermitianOp& op) {
    return json{{"q", op.q}, {"a", cplx(op.a)}, {"b", cplx(op.b)}, {"c", cplx(op.c)}, {"matrix", mat(op.matrix())}};
}

json eigenvalues(const Mat2& m) {
    const Eigen2 eig = eigen2(m);
    return json::array({cplx(eig.values[0]), cplx(eig.values[1])});
}

void write(std::string& s, const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            s += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) s += ',';
                first = false;
                s += json(key).dump();
                s += ':';
                write(s, value);
            }
            s += '}';
            break;
        }
        case json::value_t::array: {
            s += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) s += ',';
                write(s, j[i]);
            }
            s += ']';
            break;
        }
        case json::value_t::number_float: {
            double d = j.get<double>();
            if (d == 0.0) d = 0.0;  // no "-0"
            if (!std::isfinite(d)) {
                s += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            s += buf;
            break;
        }
        default: s += j.dump(); break;
    }
}

QuasiHermitianOp load_operator(const std::string& arg, double tol) {
    return validate_quasi_hermitian(parse_matrix_document(load_document(arg)), tol);
}

double parse_tolerance(const std::optional<std::string>& env) {
    if (!env) return kAcceptTol;
    try {
        std::size_t used = 0;
        const double t = std::stod(*env, &used);
        if (used == env->size() && std::isfinite(t) && t > 0.0) return t;
    } catch (const std::exception&) {
    }
    throw Malformed("InvalidTolerance", "QH2_TOL must be a positive real number");
}

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw Malformed("InvalidArgument", std::string(name) + " must be positive and finite");
}

struct Options {
    std::string matrix;
    std::string pair;
    std::string eta;
    double u = 1.0;
    double k = 1.0;
    std::uint64_t seed = 0;
    std::size_t count = 10;
};

Outcome cmd_validate(const Options& o, double tol) {
    const Mat2 m = parse_matrix_document(load_document(o.matrix));
    json body{{"command", "validate"}};
    try {
        const QuasiHermitianOp op = validate_quasi_hermitian(m, tol);
        body["quasi_hermitian"] = true;
        body["q"] = op.q;
        body["a"] = cplx(op.a);
        body["b"] = cplx(op.b);
        body["c"] = cplx(op.c);
        body["E"] = op.energy();
        body["eigenvalues"] = eigenvalues(m);
        return {kOk, body};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotQuasiHermitian) throw;
        body["quasi_hermitian"] = false;
        body["reason"] = e.reason();
        body["detail"] = e.what();
        return {kRefused, body};
    }
}

Outcome cmd_angle(const Options& o, double tol) {
    const QuasiHermitianOp op = load_operator(o.matrix, tol);
    const AngleForm af = to_angle_form(op, tol);
    return {kOk, json{{"command", "angle"}, {"q", op.q}, {"E", af.energy}, {"theta", angle(af.theta)},
                      {"phi", angle(af.phi)}}};
}

Outcome cmd_metric(const Options& o, double tol) {
    require_positive(o.u, "--u");
    require_positive(o.k, "--k");
    const QuasiHermitianOp op = load_operator(o.matrix, tol);
    const MetricOperator eta = build_metric(op, {o.k, o.u});
    json body{{"command", "metric"}, {"u", o.u}, {"k", o.k}, {"eta", mat(eta.matrix)}};
    if (op.is_triangular(tol)) {
        body["path"] = "spectral-basis";
        body["coefficients"] = nullptr;
    } else {
        body["path"] = "angle-form";
        const CaseCoefficients cc = case_coefficients(to_angle_form(op, tol), o.u);
        body["coefficients"] = json{{"mA", cc.coeffs.mA},
                                    {"mB", cc.coeffs.mB},
                                    {"zeta", cplx(cc.coeffs.zeta)},
                                    {"lambda", cplx(cc.lambda)},
                                    {"r", cc.r},
                                    {"s", cc.s},
                                    {"rs_minus_lambda_sq", cc.r * cc.s - std::norm(cc.lambda)},
                                    {"case", to_string(cc.label)}};
    }
    return {kOk, body};
}

json free_params_json(const ObservableFreeParams& p) {
    if (const auto* p1 = std::get_if<Case1Params>(&p.params))
        return json{{"q", p.q}, {"re_a", p1->re_a}, {"b", cplx(p1->b)}};
    const auto& p2 = std::get<Case2Params>(p.params);
    return json{{"q", p.q}, {"a", cplx(p2.a)}, {"w", p2.w}};
}

Outcome cmd_observables(const Options& o, double tol) {
    require_positive(o.u, "--u");
    const QuasiHermitianOp h = load_operator(o.matrix, tol);
    json body{{"command", "observables"}, {"u", o.u}, {"seed", o.seed}, {"count", o.count}};
    json list = json::array();
    auto entry = [&](std::size_t i, const QuasiHermitianOp& op, const char* label, json params) {
        const Irreducibility irr = irreducibility_test(h, op, tol);
        json e = op_json(op);
        e["index"] = i;
        e["case"] = label;
        e["free_params"] = std::move(params);
        e["irreducible"] = irr.irreducible;
        e["delta"] = cplx(irr.delta);
        list.push_back(std::move(e));
    };

    if (h.is_triangular(tol)) {
        body["case"] = "spectral";
        const MetricOperator eta = build_metric(h, {1.0, o.u});
        for (std::size_t i = 0; i < o.count; ++i) {
            Rng rng = stream(o.seed, i);
            std::uniform_real_distribution<double> d(-1.0, 1.0);
            const double x = d(rng), y = d(rng), z = d(rng), q = d(rng);
            const Mat2 herm{x, Complex(y, z), Complex(y, -z), -x};
            entry(i, compatible_from_hermitian(eta, herm, q), "spectral", json{{"q", q}, {"hermitian", mat(herm)}});
        }
    } else {
        const AngleForm af = to_angle_form(h, tol);
        body["case"] = to_string(case_coefficients(af, o.u).label);
        for (const auto& obs : sample_compatible(af, o.u, o.seed, o.count))
            entry(list.size(), obs.op, to_string(obs.label), free_params_json(obs.generated_from));
    }
    body["observables"] = std::move(list);
    return {kOk, body};
}

Outcome cmd_pair_metric(const Options& o, double tol) {
    const QuasiHermitianOp h = load_operator(o.matrix, tol);
    const QuasiHermitianOp hp = load_operator(o.pair, tol);
    const PairMetric pm = metric_from_pair(h, hp, tol);
    json body{{"command", "pair-metric"}, {"u", pm.u}, {"k", 1.0}, {"route", to_string(pm.route)}};
    body["w"] = pm.w ? json(*pm.w) : json(nullptr);
    body["eta"] = mat(pm.eta.matrix);
    return {kOk, body};
}

Outcome cmd_irreducible(const Options& o, double tol) {
    const QuasiHermitianOp h = load_operator(o.matrix, tol);
    const QuasiHermitianOp hp = load_operator(o.pair, tol);
    const Irreducibility irr = irreducibility_test(h, hp, tol);
    json body{{"command", "irreducible"}, {"irreducible", irr.irreducible}, {"delta", cplx(irr.delta)},
              {"abs_delta", std::abs(irr.delta)}, {"threshold", irr.threshold}};
    return {irr.irreducible ? kOk : kRefused, body};
}

Outcome cmd_hermitize(const Options& o, double tol) {
    const QuasiHermitianOp h = load_operator(o.matrix, tol);
    json body{{"command", "hermitize"}};
    MetricOperator eta;
    if (!o.eta.empty()) {
        eta = MetricOperator::from_matrix(parse_matrix_document(load_document(o.eta)));
        body["u"] = nullptr;
    } else {
        require_positive(o.u, "--u");
        eta = build_metric(h, {1.0, o.u});
        body["u"] = o.u;
    }
    const Hermitized out = hermitize(h, eta, tol);
    body["eta"] = mat(eta.matrix);
    body["rho"] = mat(out.rho);
    body["h"] = mat(out.h);
    body["eigenvalues_H"] = eigenvalues(h.matrix());
    body["eigenvalues_h"] = eigenvalues(out.h);
    return {kOk, body};
}

Outcome cmd_verify(const Options& o, double tol) {
    const QuasiHermitianOp h = load_operator(o.matrix, tol);
    std::optional<QuasiHermitianOp> hp;
    if (!o.pair.empty()) hp = load_operator(o.pair, tol);
    const oracle::CrossValidationReport rep = oracle::cross_validate(h, hp);
    json body{{"command", "verify"},
              {"mode", hp ? "pair" : "single"},
              {"pass", rep.pass},
              {"max_deviation", rep.max_deviation},
              {"tolerance", rep.tolerance},
              {"kernel_dim", rep.kernel_dim},
              {"expected_dim", rep.expected_dim}};
    body["u_closed_form"] = rep.u_closed_form ? json(*rep.u_closed_form) : json(nullptr);
    body["u_oracle"] = rep.u_oracle ? json(*rep.u_oracle) : json(nullptr);
    body["notes"] = rep.notes;
    return {rep.pass ? kOk : kRefused, body};
}

}  // namespace

std::string dump17(const nlohmann::ordered_json& j) {
    std::string s;
    write(s, j);
    return s;
}

std::string load_document(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Mat2 parse_matrix_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix")) throw std::invalid_argument("expected an object with key \"matrix\"");
    if (doc.contains("label") && !doc["label"].is_string()) throw std::invalid_argument("\"label\" must be a string");
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != 2) throw std::invalid_argument("\"matrix\" must have exactly 2 rows");
    Mat2 m;
    for (std::size_t i = 0; i < 2; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 2) throw std::invalid_argument("each row must have exactly 2 entries");
        for (std::size_t j = 0; j < 2; ++j) {
            const json& z = rows[i][j];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                throw std::invalid_argument("each entry must be a [re, im] pair of numbers");
            const double re = z[0].get<double>();
            const double im = z[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("entries must be finite");
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> tol_env) {
    CLI::App app{"Quasi-Hermitian operators on C^2: metrics, compatible observables, irreducibility.", "qh2"};
    app.footer(kConventions);
    app.require_subcommand(1);

    Options o;
    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("-m,--matrix", o.matrix, "MatrixDocument file or inline JSON for H")->required();
    };
    auto add_pair = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-p,--pair", o.pair, "MatrixDocument file or inline JSON for H'");
        if (required) opt->required();
    };

    auto* validate = app.add_subcommand("validate", "check quasi-Hermiticity and report (q, a, b, c, E)");
    add_matrix(validate);
    auto* angle_cmd = app.add_subcommand("angle", "report the angle form (E, theta, phi)");
    add_matrix(angle_cmd);
    auto* metric = app.add_subcommand("metric", "build the metric for weight u and scale k");
    add_matrix(metric);
    metric->add_option("--u", o.u, "relative weight u > 0")->capture_default_str();
    metric->add_option("--k", o.k, "scale k > 0")->capture_default_str();
    auto* observables = app.add_subcommand("observables", "sample compatible observables");
    add_matrix(observables);
    observables->add_option("--u", o.u, "relative weight u > 0")->capture_default_str();
    observables->add_option("--seed", o.seed, "sampler seed")->capture_default_str();
    observables->add_option("--count", o.count, "number of samples")->capture_default_str();
    auto* pair_metric = app.add_subcommand("pair-metric", "recover the metric fixed by an irreducible pair");
    add_matrix(pair_metric);
    add_pair(pair_metric, true);
    auto* irreducible = app.add_subcommand("irreducible", "test whether H and H' share an eigenvector");
    add_matrix(irreducible);
    add_pair(irreducible, true);
    auto* hermitize_cmd = app.add_subcommand("hermitize", "similarity-transform H to a Hermitian h");
    add_matrix(hermitize_cmd);
    hermitize_cmd->add_option("--u", o.u, "use the metric of H's own family with weight u")->capture_default_str();
    hermitize_cmd->add_option("--eta", o.eta, "MatrixDocument file or inline JSON for the metric");
    auto* verify = app.add_subcommand("verify", "cross-validate closed forms against the brute-force oracle");
    add_matrix(verify);
    add_pair(verify, false);

    auto emit_error = [&](const std::string& code, const std::string& detail) {
        out << dump17(json{{"error", code}, {"detail", detail}}) << '\n';
        err << "qh2: " << detail << '\n';
        return int{kMalformed};
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what());
    }
    if (o.count > 1000000) return emit_error("InvalidArgument", "--count is limited to 1000000");

    std::string command;
    try {
        const double tol = parse_tolerance(tol_env);
        Outcome res;
        if (validate->parsed()) { command = "validate"; res = cmd_validate(o, tol); }
        else if (angle_cmd->parsed()) { command = "angle"; res = cmd_angle(o, tol); }
        else if (metric->parsed()) { command = "metric"; res = cmd_metric(o, tol); }
        else if (observables->parsed()) { command = "observables"; res = cmd_observables(o, tol); }
        else if (pair_metric->parsed()) { command = "pair-metric"; res = cmd_pair_metric(o, tol); }
        else if (irreducible->parsed()) { command = "irreducible"; res = cmd_irreducible(o, tol); }
        else if (hermitize_cmd->parsed()) { command = "hermitize"; res = cmd_hermitize(o, tol); }
        else { command = "verify"; res = cmd_verify(o, tol); }
        out << dump17(res.body) << '\n';
        return res.exit_code;
    } catch (const Malformed& e) {
        return emit_error(e.code, e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("MalformedInput", e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) return emit_error("InvalidArgument", e.what());
        json body{{"command", command}, {"refused", true}, {"error", std::string(to_string(e.code()))}};
        body["reason"] = e.reason();
        body["detail"] = e.what();
        out << dump17(body) << '\n';
        err << "qh2 " << command << ": " << e.what() << '\n';
        return kRefused;
    }
}

}  // namespace qh2::cli
