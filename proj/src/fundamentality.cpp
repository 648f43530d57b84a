#include "dunkl/fundamentality.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

Rational lambda_kappa(const RootSystemSpec& spec) {
    if (spec.dim == 2 && spec.kappa_all_zero())
        throw std::invalid_argument(
            "degenerate configuration: d = 2 requires a nonzero multiplicity");
    return spec.kappa_sum_positive() + Rational(spec.dim - 2, 2);
}

FundamentalityReport check_fundamentality(const FunctionHandle& g, const RootSystemSpec& spec,
                                          int n_max, double zero_threshold, int quad_order) {
    Rational lam = lambda_kappa(spec);
    if (lam <= 0) throw std::invalid_argument("lambda_kappa must be positive");
    FundamentalityReport rep;
    rep.lambda = to_double(lam);
    rep.n_max = n_max;
    rep.zero_threshold = zero_threshold;
    if (quad_order <= 0) quad_order = default_quad_order(n_max, g);
    rep.quad_order = quad_order;

    double sup = 0;
    for (int j = 0; j <= 256; ++j) {
        double t = -1.0 + 2.0 * j / 256;
        sup = std::max(sup, std::abs(g(t)));
    }
    // Relative threshold: scaling g scales b and sup alike, so verdicts are
    // invariant under g -> c*g.
    rep.scale = sup;

    rep.b.resize(n_max + 1);
    rep.nonzero.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rep.b[n] = coeff_b(g, rep.lambda, n, quad_order);
        rep.nonzero[n] = std::abs(rep.b[n]) > zero_threshold * rep.scale;
        if (!rep.nonzero[n]) rep.witnesses.push_back(n);
    }
    rep.fundamental_up_to_nmax = rep.witnesses.empty();
    return rep;
}

std::vector<ColumnLimit> summability_limits(const std::function<double(long, int)>& a, int m_max,
                                            long n0, int ladder) {
    if (ladder < 2) throw std::invalid_argument("ladder must have at least two rungs");
    std::vector<ColumnLimit> out;
    for (int m = 0; m <= m_max; ++m) {
        std::vector<std::vector<double>> t(ladder);
        long n = n0;
        bool diverged = false;
        for (int k = 0; k < ladder; ++k, n *= 2) {
            t[k].resize(k + 1);
            t[k][0] = a(n, m);
            if (!std::isfinite(t[k][0])) diverged = true;
            for (int j = 1; j <= k; ++j) {
                double w = std::pow(2.0, j);
                t[k][j] = (w * t[k][j - 1] - t[k - 1][j - 1]) / (w - 1.0);
            }
        }
        ColumnLimit col;
        col.m = m;
        col.limit = t[ladder - 1][ladder - 1];
        col.residual = std::abs(t[ladder - 1][ladder - 1] - t[ladder - 2][ladder - 2]);
        col.converged = !diverged && std::isfinite(col.limit) &&
                        col.residual <= 1e-8 * std::max(1.0, std::abs(col.limit));
        out.push_back(col);
    }
    return out;
}

}  // namespace dunkl
