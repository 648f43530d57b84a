#include "dunkl/verify.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/fundamentality.hpp"
#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/sphere_quadrature.hpp"

namespace dunkl::verify {

namespace {

Rational rat(const char* s) { return parse_rational(s); }

// Matrix of an operator P_n^d -> P_{n-1}^d in monomial_basis order.
EMat op_matrix(const DunklContext& ctx, int axis, int n, bool use_dunkl) {
    int d = ctx.dim();
    auto bn = monomial_basis_exponents(n, d);
    auto bp = monomial_basis_exponents(n - 1, d);
    std::map<Mono, std::size_t, MonoLess> idx;
    for (std::size_t i = 0; i < bp.size(); ++i) idx.emplace(bp[i], i);
    EMat m = emat_zero(bp.size(), bn.size());
    for (std::size_t j = 0; j < bn.size(); ++j) {
        MPoly mono = MPoly::monomial(bn[j], ExactReal(1));
        MPoly img = use_dunkl ? dunkl_apply(ctx, axis, mono) : mono.partial(axis);
        for (const auto& [mm, c] : img.terms()) m[idx.at(mm)][j] = c;
    }
    return m;
}

std::vector<double> sample_unit(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(d);
    double n2 = 0;
    do {
        n2 = 0;
        for (auto& c : x) {
            c = gauss(rng);
            n2 += c * c;
        }
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    for (auto& c : x) c *= inv;
    return x;
}

struct NamedSpec {
    std::string name;
    RootSystemSpec spec;
    int n_max;
};

CriterionResult c1_intertwining_exact() {
    CriterionResult r{1, "intertwining relations exact (D_i V = V d_i)", false, 0, 0, ""};
    std::vector<NamedSpec> cases = {
        {"Z2^2 k=(1/2,1/2)", build_z2(2, {rat("1/2"), rat("1/2")}), 12},
        {"Z2^2 k=(1/3,2)", build_z2(2, {rat("1/3"), rat("2")}), 12},
        {"Z2^3 k=(1,1,1)", build_z2(3, {rat("1"), rat("1"), rat("1")}), 8},
        {"I2(3) k=1/2", build_i2(3, {rat("1/2")}), 12},
        {"I2(4) k=(2/3,1)", build_i2(4, {rat("2/3"), rat("1")}), 12},
    };
    int failures = 0;
    for (const auto& cs : cases) {
        auto ctx = std::make_shared<DunklContext>(cs.spec);
        IntertwineTable table(ctx, cs.n_max);
        for (int n = 1; n <= cs.n_max; ++n)
            for (int i = 1; i <= cs.spec.dim; ++i) {
                EMat lhs = emat_mul(op_matrix(*ctx, i, n, true), table.matrix(n));
                EMat rhs = emat_mul(table.matrix(n - 1), op_matrix(*ctx, i, n, false));
                if (!emat_equal(lhs, rhs)) {
                    ++failures;
                    r.detail += cs.name + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                " mismatch; ";
                }
            }
    }
    r.metric = failures;
    r.threshold = 0;
    r.pass = failures == 0;
    if (r.pass) r.detail = "exact rational equality on all configurations";
    return r;
}

CriterionResult c2_kernel_identity(std::uint64_t seed) {
    CriterionResult r{2, "kernel identity V(x;C_n,y) = l/(n+l) sum S(x)S(y)", false, 0, 1e-9, ""};
    std::vector<NamedSpec> cases = {
        {"Z2^2 k=(1/2,1/2)", build_z2(2, {rat("1/2"), rat("1/2")}), 6},
        {"Z2^3 k=(1,1,1)", build_z2(3, {rat("1"), rat("1"), rat("1")}), 6},
        {"Z2^3 k=0 (classical)", build_z2(3, {rat("0"), rat("0"), rat("0")}), 6},
    };
    double worst = 0;
    for (const auto& cs : cases) {
        auto ctx = std::make_shared<DunklContext>(cs.spec);
        IntertwineTable table(ctx, cs.n_max);
        SphereRule rule = build_rule(WeightSpec{cs.spec}, 2 * cs.n_max + 4);
        double lambda = to_double(lambda_kappa(cs.spec));
        std::mt19937_64 rng(seed);
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
        for (int p = 0; p < 200; ++p)
            pairs.emplace_back(sample_unit(rng, cs.spec.dim), sample_unit(rng, cs.spec.dim));
        for (int n = 0; n <= cs.n_max; ++n) {
            auto basis = orthonormal_basis(*ctx, rule, n);
            double res = kernel_identity_residual(table, basis, lambda, pairs);
            if (res > worst) {
                worst = res;
                r.detail = cs.name + " n=" + std::to_string(n);
            }
        }
    }
    r.metric = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CriterionResult c3_cross_degree_orthogonality() {
    CriterionResult r{3, "cross-degree orthogonality of harmonic spaces", false, 0, 1e-10, ""};
    std::vector<NamedSpec> cases = {
        {"Z2^2 k=(1/2,1/2)", build_z2(2, {rat("1/2"), rat("1/2")}), 6},
        {"Z2^2 k=(1/3,2)", build_z2(2, {rat("1/3"), rat("2")}), 6},
        {"I2(3) k=1", build_i2(3, {rat("1")}), 6},
        {"I2(4) k=(1/2,3/2)", build_i2(4, {rat("1/2"), rat("3/2")}), 6},
    };
    double worst = 0;
    for (const auto& cs : cases) {
        DunklContext ctx(cs.spec);
        SphereRule rule = build_rule(WeightSpec{cs.spec}, 2 * cs.n_max + 4);
        std::vector<HarmonicBasis> bases;
        for (int n = 0; n <= cs.n_max; ++n) bases.push_back(orthonormal_basis(ctx, rule, n));
        double res = verify_orthogonality_across_degrees(bases, rule);
        if (res > worst) {
            worst = res;
            r.detail = cs.name;
        }
    }
    r.metric = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CriterionResult c4_dunkl_algebra() {
    CriterionResult r{4, "Dunkl operator algebra (commutativity, k=0, R_+ choice)", false, 0, 0,
                      ""};
    int failures = 0;
    std::vector<NamedSpec> comm_cases = {
        {"Z2^2 k=(1/3,2)", build_z2(2, {rat("1/3"), rat("2")}), 8},
        {"I2(3) k=1/2", build_i2(3, {rat("1/2")}), 8},
        {"I2(4) k=(2/3,1)", build_i2(4, {rat("2/3"), rat("1")}), 8},
        {"Z2^3 k=(1,1,1)", build_z2(3, {rat("1"), rat("1"), rat("1")}), 8},
    };
    for (const auto& cs : comm_cases) {
        DunklContext ctx(cs.spec);
        int d = cs.spec.dim;
        for (int n = 0; n <= cs.n_max; ++n)
            for (const auto& mono : monomial_basis(n, d))
                for (int i = 1; i <= d; ++i)
                    for (int j = i + 1; j <= d; ++j) {
                        MPoly a = dunkl_apply(ctx, i, dunkl_apply(ctx, j, mono));
                        MPoly b = dunkl_apply(ctx, j, dunkl_apply(ctx, i, mono));
                        if (!(a == b)) {
                            ++failures;
                            r.detail += cs.name + " commutator failure; ";
                        }
                    }
    }
    {
        RootSystemSpec zero = build_z2(3, {rat("0"), rat("0"), rat("0")});
        DunklContext ctx(zero);
        for (int n = 0; n <= 8; ++n)
            for (const auto& mono : monomial_basis(n, 3))
                for (int i = 1; i <= 3; ++i)
                    if (!(dunkl_apply(ctx, i, mono) == mono.partial(i))) {
                        ++failures;
                        r.detail += "k=0 degeneration failure; ";
                    }
    }
    for (const auto& cs : std::vector<NamedSpec>{
             {"Z2^2 k=(1/3,2)", build_z2(2, {rat("1/3"), rat("2")}), 6},
             {"I2(4) k=(2/3,1)", build_i2(4, {rat("2/3"), rat("1")}), 6}}) {
        DunklContext ctx(cs.spec);
        DunklContext flipped(flip_positive(cs.spec));
        for (int n = 0; n <= cs.n_max; ++n)
            for (const auto& mono : monomial_basis(n, cs.spec.dim))
                for (int i = 1; i <= cs.spec.dim; ++i)
                    if (!(dunkl_apply(ctx, i, mono) == dunkl_apply(flipped, i, mono))) {
                        ++failures;
                        r.detail += cs.name + " R_+ dependence; ";
                    }
    }
    r.metric = failures;
    r.pass = failures == 0;
    if (r.pass) r.detail = "all identities exact";
    return r;
}

CriterionResult c5_gegenbauer_normalization() {
    CriterionResult r{5, "Gegenbauer normalization c_l int (C_n)^2 w = C_n(1) l/(n+l)", false, 0,
                      1e-12, ""};
    double worst = 0;
    for (double lambda : {0.5, 1.0, 1.5, 3.5}) {
        auto rule = gauss_jacobi(64, lambda - 0.5, lambda - 0.5);
        double cl = c_lambda(lambda);
        for (int n = 0; n <= 40; ++n) {
            std::vector<double> terms(rule.nodes.size());
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                double c = gegenbauer_eval(n, lambda, rule.nodes[i]);
                terms[i] = rule.weights[i] * c * c;
            }
            double lhs = cl * pairwise_sum(terms);
            double rhs = gegenbauer_at_one(n, lambda) * lambda / (n + lambda);
            double rel = std::abs(lhs - rhs) / std::abs(rhs);
            if (rel > worst) {
                worst = rel;
                std::ostringstream os;
                os << "lambda=" << lambda << " n=" << n;
                r.detail = os.str();
            }
        }
    }
    r.metric = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CriterionResult c6_coefficient_oracle() {
    CriterionResult r{6, "coefficient oracle b_k = l/(k+l) for g = C_k", false, 0, 1e-12, ""};
    double lambda = 1.0;
    double worst_diag = 0, worst_off = 0;
    for (int k = 0; k <= 10; ++k) {
        auto g = FunctionHandle::polynomial(gegenbauer_coeffs(k, lambda));
        for (int n = 0; n <= 10; ++n) {
            double b = coeff_b(g, lambda, n, 0);
            if (n == k)
                worst_diag = std::max(worst_diag, std::abs(b - lambda / (k + lambda)));
            else
                worst_off = std::max(worst_off, std::abs(b));
        }
    }
    r.metric = std::max(worst_diag, worst_off * 10);  // off-diagonal bound is 1e-13
    r.pass = worst_diag <= 1e-12 && worst_off <= 1e-13;
    std::ostringstream os;
    os << "diag err " << worst_diag << ", off-diag " << worst_off;
    r.detail = os.str();
    return r;
}

CriterionResult c7_cesaro_convergence() {
    CriterionResult r{7, "Cesaro uniform convergence (|t| and degree-8 polynomial)", false, 0, 0,
                      ""};
    bool pass = true;
    std::ostringstream os;
    {
        FunctionHandle g;
        g.eval = [](double t) { return std::abs(t); };
        g.smooth = false;
        g.kinks = {0.0};
        double lambda = 1.0, delta = 2.0;
        auto series = expand(g, lambda, 256);
        double e16 = uniform_error(g, series, {delta, 16}, 257);
        double e256 = uniform_error(g, series, {delta, 256}, 257);
        os << "|t|: err(16)=" << e16 << " err(256)=" << e256;
        if (!(e256 < 0.25 * e16) || !(e256 <= 5e-2)) pass = false;
        r.metric = e256;
        r.threshold = 5e-2;
    }
    {
        // delta is pinned only for the |t| clause; for the finite expansion a
        // light Cesaro order keeps the (C,delta) deficit ~ delta*deg/N.
        std::vector<double> coeffs{0.5, 0, 0, 1.0, 0, -2.0, 0, 0, 1.0};  // degree 8
        auto g = FunctionHandle::polynomial(coeffs);
        double sup = 0;
        for (int j = 0; j <= 256; ++j) sup = std::max(sup, std::abs(g(-1.0 + 2.0 * j / 256)));
        auto series = expand(g, 1.0, 256);
        double err = uniform_error(g, series, {0.25, 256}, 257);
        os << "; poly deg 8 (delta=1/4): err(256)=" << err << " bound=" << 1e-2 * sup;
        if (!(err <= 1e-2 * sup)) pass = false;
    }
    r.pass = pass;
    r.detail = os.str();
    return r;
}

CriterionResult c8_fundamentality_verdicts() {
    CriterionResult r{8, "fundamentality verdicts (C_3, zero, exp, scale invariance)", false, 0, 0,
                      ""};
    RootSystemSpec spec = build_z2(2, {rat("1/2"), rat("1/2")});
    double lambda = to_double(lambda_kappa(spec));
    bool pass = true;
    std::ostringstream os;
    {
        auto g = FunctionHandle::polynomial(gegenbauer_coeffs(3, lambda));
        auto rep = check_fundamentality(g, spec);
        std::vector<int> expected;
        for (int n = 0; n <= 32; ++n)
            if (n != 3) expected.push_back(n);
        if (rep.fundamental_up_to_nmax || rep.witnesses != expected) {
            pass = false;
            os << "C_3 witness set wrong; ";
        }
        if (std::abs(rep.b[3] - lambda / (3 + lambda)) > 1e-10) {
            pass = false;
            os << "C_3 surviving coefficient wrong; ";
        }
    }
    {
        auto g = FunctionHandle::polynomial({0.0});
        auto rep = check_fundamentality(g, spec);
        if (rep.witnesses.size() != 33) {
            pass = false;
            os << "zero function witness set wrong; ";
        }
    }
    {
        FunctionHandle g;
        g.eval = [](double t) { return std::exp(t); };
        auto rep = check_fundamentality(g, spec);
        if (!rep.fundamental_up_to_nmax) {
            pass = false;
            os << "exp not certified fundamental-up-to-32: smallest coefficients (b_n = "
                  "2*I_(n+1)(1), about 1e-47 at n=32) fall below the relative threshold "
                  "1e-10*scale from n=10 on; ";
        }
    }
    {
        FunctionHandle g;
        g.eval = [](double t) { return std::exp(t); };
        auto rep1 = check_fundamentality(g, spec);
        for (double c : {1e3, 1e-3}) {
            FunctionHandle gs;
            gs.eval = [c](double t) { return c * std::exp(t); };
            auto rep2 = check_fundamentality(gs, spec);
            if (rep1.nonzero != rep2.nonzero) {
                pass = false;
                os << "verdicts not scale invariant at c=" << c << "; ";
            }
        }
    }
    r.pass = pass;
    r.detail = pass ? "all verdict checks hold" : os.str();
    r.metric = pass ? 0 : 1;
    return r;
}

CriterionResult c9_quadrature_certificates() {
    CriterionResult r{9, "quadrature exactness vs iterated-Beta oracle; sigma_2 mass", false, 0,
                      1e-12, ""};
    double worst = 0;
    bool pass = true;
    std::ostringstream os;

    auto beta_oracle = [](const Mono& alpha, const std::vector<double>& kappas) -> double {
        // int_{S^{d-1}} x^alpha prod |x_i|^{2 kap_i} d omega, closed form.
        for (int e : alpha)
            if (e % 2 == 1) return 0.0;
        double logv = std::log(2.0), s = 0;
        for (std::size_t i = 0; i < kappas.size(); ++i) {
            double a = alpha[i] + 2 * kappas[i];
            logv += std::lgamma((a + 1) / 2);
            s += a + 1;
        }
        return std::exp(logv - std::lgamma(s / 2));
    };

    struct Case {
        std::string name;
        RootSystemSpec spec;
        std::vector<double> kappas;
        int degree;
    };
    std::vector<Case> cases = {
        {"Z2^2 k=(1/2,1/2)", build_z2(2, {rat("1/2"), rat("1/2")}), {0.5, 0.5}, 64},
        {"Z2^3 k=(1,1,1)", build_z2(3, {rat("1"), rat("1"), rat("1")}), {1.0, 1.0, 1.0}, 40},
    };
    for (const auto& cs : cases) {
        SphereRule rule = build_rule(WeightSpec{cs.spec}, cs.degree);
        int d = cs.spec.dim;
        // Per-node coordinate power tables.
        std::vector<std::vector<std::vector<double>>> pw(rule.nodes.size());
        for (std::size_t p = 0; p < rule.nodes.size(); ++p) {
            pw[p].assign(d, std::vector<double>(cs.degree + 1, 1.0));
            for (int t = 0; t < d; ++t)
                for (int e = 1; e <= cs.degree; ++e)
                    pw[p][t][e] = pw[p][t][e - 1] * rule.nodes[p][t];
        }
        double mass0 = beta_oracle(Mono(d, 0), cs.kappas);
        for (int n = 0; n <= cs.degree; ++n)
            for (const auto& alpha : monomial_basis_exponents(n, d)) {
                std::vector<double> terms(rule.nodes.size());
                for (std::size_t p = 0; p < rule.nodes.size(); ++p) {
                    double v = rule.weights[p];
                    for (int t = 0; t < d; ++t) v *= pw[p][t][alpha[t]];
                    terms[p] = v;
                }
                double got = pairwise_sum(terms);
                double want = beta_oracle(alpha, cs.kappas) / mass0;
                worst = std::max(worst, std::abs(got - want));
            }
        if (cs.spec.dim == 2) {
            double sigma = rule.mass;
            os << "sigma_2 = " << sigma << "; ";
            if (std::abs(sigma - 2.0) > 1e-13) pass = false;
        }
    }
    r.metric = worst;
    if (worst > r.threshold) pass = false;
    r.pass = pass;
    r.detail = os.str() + "worst monomial deviation " + std::to_string(worst);
    return r;
}

CriterionResult c10_summability_limits() {
    CriterionResult r{10, "summability matrix column limits match b_m", false, 0, 1e-8, ""};
    double worst = 0;
    std::vector<double> b1 = {1.0, 0.5, 1.0 / 3, 0.25, 0.2, 1.0 / 6};
    std::vector<double> b2 = {0.9, -0.3, 0.07, 1.4, -2.0, 0.011};
    {
        double delta = 2.0;
        auto a = [&](long n, int m) {
            return cesaro_coefficient(static_cast<int>(n) - m, delta) /
                   cesaro_coefficient(static_cast<int>(n), delta) * b1[m];
        };
        auto lims = summability_limits(a, 5);
        for (const auto& col : lims) {
            if (!col.converged) worst = std::max(worst, 1.0);
            worst = std::max(worst, std::abs(col.limit - b1[col.m]));
        }
    }
    {
        auto a = [&](long n, int m) {
            return b2[m] * static_cast<double>(n) / (static_cast<double>(n) + 1.0);
        };
        auto lims = summability_limits(a, 5);
        for (const auto& col : lims) {
            if (!col.converged) worst = std::max(worst, 1.0);
            worst = std::max(worst, std::abs(col.limit - b2[col.m]));
        }
    }
    r.metric = worst;
    r.pass = worst <= r.threshold;
    r.detail = "Cesaro-ratio series and rational-ratio series";
    return r;
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : results)
        if (!c.pass) return false;
    return true;
}

VerifyReport run_acceptance(std::uint64_t seed) {
    VerifyReport rep;
    rep.seed = seed;
    rep.results.push_back(c1_intertwining_exact());
    rep.results.push_back(c2_kernel_identity(seed));
    rep.results.push_back(c3_cross_degree_orthogonality());
    rep.results.push_back(c4_dunkl_algebra());
    rep.results.push_back(c5_gegenbauer_normalization());
    rep.results.push_back(c6_coefficient_oracle());
    rep.results.push_back(c7_cesaro_convergence());
    rep.results.push_back(c8_fundamentality_verdicts());
    rep.results.push_back(c9_quadrature_certificates());
    rep.results.push_back(c10_summability_limits());
    return rep;
}

}  // namespace dunkl::verify
