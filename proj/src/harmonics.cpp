#include "dunkl/harmonics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

double HarmonicBasis::eval_ortho(std::size_t j, const std::vector<double>& x) const {
    const auto& c = ortho_coeffs.at(j);
    double acc = 0;
    for (std::size_t r = 0; r < exponents.size(); ++r) {
        if (c[r] == 0.0) continue;
        double mono = 1.0;
        for (std::size_t t = 0; t < x.size(); ++t)
            for (int e = 0; e < exponents[r][t]; ++e) mono *= x[t];
        acc += c[r] * mono;
    }
    return acc;
}

std::size_t harmonic_dimension(int n, int d) {
    auto dimP = [d](int k) -> std::size_t {
        if (k < 0) return 0;
        // C(k+d-1, d-1)
        std::size_t v = 1;
        for (int j = 1; j <= d - 1; ++j) v = v * (k + j) / j;
        return v;
    };
    return dimP(n) - dimP(n - 2);
}

std::vector<MPoly> harmonic_kernel(const DunklContext& ctx, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    int d = ctx.dim();
    if (n <= 1) return monomial_basis(n, d);
    auto bn = monomial_basis_exponents(n, d);
    auto bm = monomial_basis_exponents(n - 2, d);
    std::map<Mono, std::size_t, MonoLess> idx;
    for (std::size_t i = 0; i < bm.size(); ++i) idx.emplace(bm[i], i);

    EMat lap = emat_zero(bm.size(), bn.size());
    for (std::size_t j = 0; j < bn.size(); ++j) {
        MPoly img = dunkl_laplacian(ctx, MPoly::monomial(bn[j], ExactReal(1)));
        for (const auto& [m, c] : img.terms()) lap[idx.at(m)][j] = c;
    }
    EMat ns = nullspace(std::move(lap));
    std::vector<MPoly> out;
    for (const auto& vec : ns) {
        MPoly p(d);
        for (std::size_t j = 0; j < vec.size(); ++j)
            if (!vec[j].is_zero()) p.add_term(bn[j], vec[j]);
        out.push_back(std::move(p));
    }
    return out;
}

HarmonicBasis orthonormal_basis(const DunklContext& ctx, const SphereRule& rule, int n) {
    if (rule.exactness_degree < 2 * n)
        throw std::invalid_argument("quadrature exactness must cover degree 2n");
    HarmonicBasis basis;
    basis.degree = n;
    basis.exponents = monomial_basis_exponents(n, ctx.dim());
    basis.kernel = harmonic_kernel(ctx, n);

    std::map<Mono, std::size_t, MonoLess> idx;
    for (std::size_t i = 0; i < basis.exponents.size(); ++i) idx.emplace(basis.exponents[i], i);

    std::size_t k = basis.kernel.size();
    std::size_t cols = basis.exponents.size();
    std::size_t m = rule.nodes.size();

    // Coefficient rows, scaled so every starting vector has unit max entry.
    std::vector<std::vector<double>> coeffs(k, std::vector<double>(cols, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        double scale = 0;
        for (const auto& [mono, c] : basis.kernel[i].terms())
            scale = std::max(scale, std::abs(c.to_double()));
        for (const auto& [mono, c] : basis.kernel[i].terms())
            coeffs[i][idx.at(mono)] = c.to_double() / scale;
    }

    // Node values of the working vectors.
    std::vector<std::vector<double>> vals(k, std::vector<double>(m));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t p = 0; p < m; ++p) {
            double acc = 0;
            for (std::size_t r = 0; r < cols; ++r) {
                if (coeffs[i][r] == 0.0) continue;
                double mono = 1.0;
                for (std::size_t t = 0; t < rule.nodes[p].size(); ++t)
                    for (int e = 0; e < basis.exponents[r][t]; ++e) mono *= rule.nodes[p][t];
                acc += coeffs[i][r] * mono;
            }
            vals[i][p] = acc;
        }
    }

    auto dot = [&](const std::vector<double>& u, const std::vector<double>& v) {
        std::vector<double> terms(m);
        for (std::size_t p = 0; p < m; ++p) terms[p] = rule.weights[p] * u[p] * v[p];
        return pairwise_sum(terms);
    };

    basis.min_pivot = std::numeric_limits<double>::infinity();
    basis.max_pivot = 0;
    // Modified Gram-Schmidt with one reorthogonalization pass.
    for (std::size_t i = 0; i < k; ++i) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t l = 0; l < i; ++l) {
                double proj = dot(vals[i], vals[l]);
                for (std::size_t p = 0; p < m; ++p) vals[i][p] -= proj * vals[l][p];
                for (std::size_t r = 0; r < cols; ++r) coeffs[i][r] -= proj * coeffs[l][r];
            }
        double nrm = std::sqrt(dot(vals[i], vals[i]));
        if (!(nrm > 1e-8))
            throw std::runtime_error("numerically dependent harmonic kernel vectors");
        basis.min_pivot = std::min(basis.min_pivot, nrm);
        basis.max_pivot = std::max(basis.max_pivot, nrm);
        for (std::size_t p = 0; p < m; ++p) vals[i][p] /= nrm;
        for (std::size_t r = 0; r < cols; ++r) coeffs[i][r] /= nrm;
    }

    double res = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            double g = dot(vals[i], vals[j]) - (i == j ? 1.0 : 0.0);
            res = std::max(res, std::abs(g));
        }
    basis.gram_residual = res;
    basis.ortho_coeffs = std::move(coeffs);
    return basis;
}

double verify_orthogonality_across_degrees(const std::vector<HarmonicBasis>& bases,
                                           const SphereRule& rule) {
    double worst = 0;
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            if (bases[a].degree == bases[b].degree) continue;
            for (std::size_t i = 0; i < bases[a].size(); ++i)
                for (std::size_t j = 0; j < bases[b].size(); ++j) {
                    double ip = inner_product(
                        rule,
                        [&](const std::vector<double>& x) { return bases[a].eval_ortho(i, x); },
                        [&](const std::vector<double>& x) { return bases[b].eval_ortho(j, x); });
                    worst = std::max(worst, std::abs(ip));
                }
        }
    return worst;
}

double kernel_identity_residual(
    const IntertwineTable& table, const HarmonicBasis& basis, double lambda,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& sample_pairs) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    int n = basis.degree;
    auto cn = gegenbauer_coeffs(n, lambda);
    double worst = 0;
    for (const auto& [x, y] : sample_pairs) {
        double lhs = apply_V_linear_form(table, cn, x, y);
        double rhs = 0;
        for (std::size_t j = 0; j < basis.size(); ++j)
            rhs += basis.eval_ortho(j, x) * basis.eval_ortho(j, y);
        rhs *= lambda / (n + lambda);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace dunkl
