// Command-line front end. Every report is JSON with a stable key order, a
// schema tag, and an echo of the parsed configuration, so identical inputs
// produce identical output bytes.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/fundamentality.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/sphere_quadrature.hpp"
#include "dunkl/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dunkl;

namespace {

constexpr const char* kSchema = "dunkl-report/1";

struct RootArgs {
    std::string family = "z2";
    int d = 2;
    int m = 3;
    std::string kappa = "1/2,1/2";
    std::string roots;  // custom: "1,0;1,1" (rational components)
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_kappa_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_rational(tok));
    return out;
}

RootSystemSpec make_spec(const RootArgs& a) {
    if (a.family == "z2") return build_z2(a.d, parse_kappa_list(a.kappa));
    if (a.family == "i2") return build_i2(a.m, parse_kappa_list(a.kappa));
    if (a.family == "custom") {
        if (a.roots.empty()) throw std::invalid_argument("--roots required for custom family");
        std::vector<std::vector<Rational>> roots;
        for (const auto& vec : split(a.roots, ';')) {
            std::vector<Rational> r;
            for (const auto& c : split(vec, ',')) r.push_back(parse_rational(c));
            roots.push_back(std::move(r));
        }
        return build_custom(static_cast<int>(roots.front().size()), roots,
                            parse_kappa_list(a.kappa));
    }
    throw std::invalid_argument("unknown family: " + a.family);
}

json echo_root_args(const RootArgs& a) {
    json j;
    j["family"] = a.family;
    if (a.family == "i2")
        j["m"] = a.m;
    else
        j["d"] = a.d;
    j["kappa"] = a.kappa;
    if (!a.roots.empty()) j["roots"] = a.roots;
    return j;
}

// Builtin g grammar: exp | abs | poly:c0,c1,... | gegenbauer:k | runge:a
FunctionHandle make_g(const std::string& spec, double lambda) {
    if (spec == "exp") {
        FunctionHandle g;
        g.eval = [](double t) { return std::exp(t); };
        return g;
    }
    if (spec == "abs") {
        FunctionHandle g;
        g.eval = [](double t) { return std::abs(t); };
        g.smooth = false;
        g.kinks = {0.0};
        return g;
    }
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
        if (head == "poly") {
            std::vector<double> c;
            for (const auto& tok : split(tail, ',')) c.push_back(std::stod(tok));
            return FunctionHandle::polynomial(c);
        }
        if (head == "gegenbauer")
            return FunctionHandle::polynomial(gegenbauer_coeffs(std::stoi(tail), lambda));
        if (head == "runge") {
            double a = std::stod(tail);
            FunctionHandle g;
            g.eval = [a](double t) { return 1.0 / (1.0 + a * t * t); };
            return g;
        }
    }
    throw std::invalid_argument("unknown g builtin: " + spec);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void add_root_flags(CLI::App* cmd, RootArgs& a) {
    cmd->add_option("--family", a.family, "z2 | i2 | custom");
    cmd->add_option("--d", a.d, "ambient dimension (z2/custom)");
    cmd->add_option("--m", a.m, "dihedral order (i2)");
    cmd->add_option("--kappa", a.kappa, "comma-separated rational multiplicities");
    cmd->add_option("--roots", a.roots, "custom roots: rational vectors 'a,b;c,d'");
}

std::string poly_or_zero(const MPoly& p) { return p.is_zero() ? "0" : p.str(); }

int run(int argc, char** argv) {
    CLI::App app{"Dunkl harmonic analysis on the sphere"};
    app.require_subcommand(1);

    RootArgs ra;
    std::string g_spec = "exp", poly_text, export_path, format = "json";
    int axis = 1, nmax = 6, fund_nmax = 32, degree = 2, order = 64, quad_order = 0, grid = 257;
    double lambda = 1.0, delta = 2.0, threshold = 1e-10;
    std::uint64_t seed = 42;

    auto* c_validate = app.add_subcommand("validate-roots", "validate a root system spec");
    add_root_flags(c_validate, ra);

    auto* c_dunkl = app.add_subcommand("dunkl-apply", "apply D_i to a polynomial");
    add_root_flags(c_dunkl, ra);
    c_dunkl->add_option("--axis", axis, "1-based axis i");
    c_dunkl->add_option("--poly", poly_text, "polynomial text, e.g. '2*x1^2*x2 - 1/3*x3'")
        ->required();

    auto* c_inter = app.add_subcommand("intertwine", "dump per-degree V matrices");
    add_root_flags(c_inter, ra);
    c_inter->add_option("--nmax", nmax, "highest degree");

    auto* c_rule = app.add_subcommand("rule", "build a weighted sphere quadrature rule");
    add_root_flags(c_rule, ra);
    c_rule->add_option("--degree", degree, "target polynomial exactness degree");
    c_rule->add_option("--export", export_path, "write nodes and weights as CSV");

    auto* c_harm = app.add_subcommand("harmonics", "orthonormal harmonic basis of one degree");
    add_root_flags(c_harm, ra);
    c_harm->add_option("--degree", degree, "harmonic degree n");

    auto* c_kernel = app.add_subcommand("kernel-check", "kernel identity residual per degree");
    add_root_flags(c_kernel, ra);
    c_kernel->add_option("--nmax", nmax, "highest degree");
    c_kernel->add_option("--seed", seed, "sample-pair seed");

    auto* c_expand = app.add_subcommand("expand", "Gegenbauer coefficients b_n of g");
    c_expand->add_option("--lambda", lambda, "Gegenbauer index");
    c_expand->add_option("--nmax", nmax, "highest coefficient index");
    c_expand->add_option("--g", g_spec, "exp | abs | poly:c0,c1,... | gegenbauer:k | runge:a");
    c_expand->add_option("--quad-order", quad_order, "quadrature order (0 = automatic)");
    c_expand->add_option("--format", format, "json | csv");

    auto* c_cesaro = app.add_subcommand("cesaro", "Cesaro mean convergence table");
    c_cesaro->add_option("--lambda", lambda, "Gegenbauer index");
    c_cesaro->add_option("--delta", delta, "Cesaro order");
    c_cesaro->add_option("--order", order, "largest truncation order N");
    c_cesaro->add_option("--g", g_spec, "builtin g");
    c_cesaro->add_option("--grid", grid, "error grid size");

    auto* c_fund = app.add_subcommand("check-fundamental", "fundamentality verdict");
    add_root_flags(c_fund, ra);
    c_fund->add_option("--g", g_spec, "builtin g");
    c_fund->add_option("--nmax", fund_nmax, "highest coefficient checked");
    c_fund->add_option("--threshold", threshold, "relative zero threshold");
    c_fund->add_option("--quad-order", quad_order, "quadrature order (0 = automatic)");

    auto* c_verify = app.add_subcommand("verify-all", "run the acceptance battery");
    c_verify->add_option("--seed", seed, "sample-point seed");

    CLI11_PARSE(app, argc, argv);

    if (c_validate->parsed()) {
        RootSystemSpec spec = make_spec(ra);
        auto rep = validate(spec);
        json j;
        j["schema"] = kSchema;
        j["command"] = "validate-roots";
        j["config"] = echo_root_args(ra);
        j["label"] = spec.label();
        j["violations"] = rep.violations;
        j["valid"] = rep.ok();
        if (rep.ok()) j["group_order"] = generate_group(spec).order();
        emit(j);
        return rep.ok() ? 0 : 2;
    }
    if (c_dunkl->parsed()) {
        RootSystemSpec spec = make_spec(ra);
        DunklContext ctx(spec);
        MPoly p = parse_mpoly(poly_text, spec.dim);
        json j;
        j["schema"] = kSchema;
        j["command"] = "dunkl-apply";
        j["config"] = echo_root_args(ra);
        j["config"]["axis"] = axis;
        j["config"]["poly"] = poly_text;
        j["result"] = poly_or_zero(dunkl_apply(ctx, axis, p));
        emit(j);
        return 0;
    }
    if (c_inter->parsed()) {
        auto ctx = std::make_shared<DunklContext>(make_spec(ra));
        IntertwineTable table(ctx, nmax);
        json j;
        j["schema"] = kSchema;
        j["command"] = "intertwine";
        j["config"] = echo_root_args(ra);
        j["config"]["nmax"] = nmax;
        json mats = json::array();
        for (int n = 0; n <= nmax; ++n) {
            json rows = json::array();
            for (const auto& row : table.matrix(n)) {
                json r = json::array();
                for (const auto& e : row) r.push_back(e.str());
                rows.push_back(r);
            }
            mats.push_back(rows);
        }
        j["matrices"] = mats;
        emit(j);
        return 0;
    }
    if (c_rule->parsed()) {
        RootSystemSpec spec = make_spec(ra);
        SphereRule rule = build_rule(WeightSpec{spec}, degree);
        if (!export_path.empty()) {
            std::ofstream out(export_path);
            if (!out) throw std::runtime_error("cannot open " + export_path);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                for (double c : rule.nodes[i]) out << json(c).dump() << ",";
                out << json(rule.weights[i]).dump() << "\r\n";
            }
        }
        json j;
        j["schema"] = kSchema;
        j["command"] = "rule";
        j["config"] = echo_root_args(ra);
        j["config"]["degree"] = degree;
        j["nodes"] = rule.nodes.size();
        j["exactness_degree"] = rule.exactness_degree;
        j["sigma"] = rule.mass;
        if (!export_path.empty()) j["export"] = export_path;
        emit(j);
        return 0;
    }
    if (c_harm->parsed()) {
        RootSystemSpec spec = make_spec(ra);
        DunklContext ctx(spec);
        SphereRule rule = build_rule(WeightSpec{spec}, 2 * degree + 4);
        auto basis = orthonormal_basis(ctx, rule, degree);
        json j;
        j["schema"] = kSchema;
        j["command"] = "harmonics";
        j["config"] = echo_root_args(ra);
        j["config"]["degree"] = degree;
        j["dimension"] = basis.size();
        json kernel = json::array();
        for (const auto& p : basis.kernel) kernel.push_back(poly_or_zero(p));
        j["kernel"] = kernel;
        j["gram_residual"] = basis.gram_residual;
        emit(j);
        return 0;
    }
    if (c_kernel->parsed()) {
        auto ctx = std::make_shared<DunklContext>(make_spec(ra));
        IntertwineTable table(ctx, nmax);
        SphereRule rule = build_rule(WeightSpec{ctx->spec()}, 2 * nmax + 4);
        double lam = to_double(lambda_kappa(ctx->spec()));
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        auto unit = [&] {
            std::vector<double> x(ctx->dim());
            double n2 = 0;
            for (auto& c : x) {
                c = gauss(rng);
                n2 += c * c;
            }
            for (auto& c : x) c /= std::sqrt(n2);
            return x;
        };
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
        for (int p = 0; p < 200; ++p) pairs.emplace_back(unit(), unit());
        json j;
        j["schema"] = kSchema;
        j["command"] = "kernel-check";
        j["config"] = echo_root_args(ra);
        j["config"]["nmax"] = nmax;
        j["config"]["seed"] = seed;
        j["lambda"] = lam;
        json table_j = json::array();
        for (int n = 0; n <= nmax; ++n) {
            auto basis = orthonormal_basis(*ctx, rule, n);
            json row;
            row["degree"] = n;
            row["residual"] = kernel_identity_residual(table, basis, lam, pairs);
            table_j.push_back(row);
        }
        j["residuals"] = table_j;
        emit(j);
        return 0;
    }
    if (c_expand->parsed()) {
        FunctionHandle g = make_g(g_spec, lambda);
        auto series = expand(g, lambda, nmax, quad_order);
        if (format == "csv") {
            std::cout << "n,b\r\n";
            for (std::size_t n = 0; n < series.b.size(); ++n)
                std::cout << n << "," << json(series.b[n]).dump() << "\r\n";
        } else {
            json j;
            j["schema"] = kSchema;
            j["command"] = "expand";
            j["config"] = {{"lambda", lambda}, {"nmax", nmax}, {"g", g_spec}};
            j["c_lambda"] = series.c_lam;
            j["quad_order"] = series.quad_order;
            j["b"] = series.b;
            emit(j);
        }
        return 0;
    }
    if (c_cesaro->parsed()) {
        FunctionHandle g = make_g(g_spec, lambda);
        auto series = expand(g, lambda, order);
        json j;
        j["schema"] = kSchema;
        j["command"] = "cesaro";
        j["config"] = {{"lambda", lambda}, {"delta", delta}, {"order", order},
                       {"g", g_spec},     {"grid", grid}};
        json rows = json::array();
        for (int N = 16; N <= order; N *= 2) {
            json row;
            row["order"] = N;
            row["uniform_error"] = uniform_error(g, series, {delta, N}, grid);
            rows.push_back(row);
        }
        j["errors"] = rows;
        emit(j);
        return 0;
    }
    if (c_fund->parsed()) {
        RootSystemSpec spec = make_spec(ra);
        double lam = to_double(lambda_kappa(spec));
        FunctionHandle g = make_g(g_spec, lam);
        auto rep = check_fundamentality(g, spec, fund_nmax, threshold, quad_order);
        json j;
        j["schema"] = kSchema;
        j["command"] = "check-fundamental";
        j["config"] = echo_root_args(ra);
        j["config"]["g"] = g_spec;
        j["config"]["nmax"] = fund_nmax;
        j["config"]["threshold"] = threshold;
        j["lambda"] = rep.lambda;
        j["scale"] = rep.scale;
        j["quad_order"] = rep.quad_order;
        j["b"] = rep.b;
        json nz = json::array();
        for (bool v : rep.nonzero) nz.push_back(v);
        j["nonzero"] = nz;
        j["witnesses"] = rep.witnesses;
        j["fundamental_up_to_nmax"] = rep.fundamental_up_to_nmax;
        emit(j);
        return rep.fundamental_up_to_nmax ? 0 : 2;
    }
    if (c_verify->parsed()) {
        auto rep = verify::run_acceptance(seed);
        json j;
        j["schema"] = kSchema;
        j["command"] = "verify-all";
        j["config"] = {{"seed", seed}};
        json crits = json::array();
        for (const auto& c : rep.results) {
            json cj;
            cj["id"] = c.id;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["metric"] = c.metric;
            cj["threshold"] = c.threshold;
            cj["detail"] = c.detail;
            crits.push_back(cj);
        }
        j["criteria"] = crits;
        j["all_pass"] = rep.all_pass();
        emit(j);
        return rep.all_pass() ? 0 : 2;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
