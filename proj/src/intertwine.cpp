#include "dunkl/intertwine.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "dunkl/fundamentality.hpp"

namespace dunkl {

namespace {

std::map<Mono, std::size_t, MonoLess> index_of(const std::vector<Mono>& basis) {
    std::map<Mono, std::size_t, MonoLess> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

EVec coords_in(const MPoly& p, const std::map<Mono, std::size_t, MonoLess>& idx,
               std::size_t size) {
    EVec c(size, ExactReal(0));
    for (const auto& [m, v] : p.terms()) c[idx.at(m)] = v;
    return c;
}

}  // namespace

IntertwineTable::IntertwineTable(std::shared_ptr<const DunklContext> ctx, int n_max)
    : ctx_(std::move(ctx)) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    int d = ctx_->dim();
    bases_.push_back(monomial_basis_exponents(0, d));
    mats_.push_back(EMat{{ExactReal(1)}});
    for (int n = 1; n <= n_max; ++n) {
        auto bn = monomial_basis_exponents(n, d);
        const auto& bprev = bases_.back();
        auto prev_idx = index_of(bprev);
        std::size_t sn = bn.size(), sp = bprev.size();

        // Stacked system: rows (i, r) ask that the r-th coordinate of
        // D_i (V p) equals that of V (d_i p).
        EMat a = emat_zero(d * sp, sn);
        EMat b = emat_zero(d * sp, sn);
        for (std::size_t j = 0; j < sn; ++j) {
            MPoly mono = MPoly::monomial(bn[j], ExactReal(1));
            for (int i = 1; i <= d; ++i) {
                EVec dcol = coords_in(dunkl_apply(*ctx_, i, mono), prev_idx, sp);
                EVec rhs = emat_apply(mats_.back(), coords_in(mono.partial(i), prev_idx, sp));
                for (std::size_t r = 0; r < sp; ++r) {
                    a[(i - 1) * sp + r][j] = dcol[r];
                    b[(i - 1) * sp + r][j] = rhs[r];
                }
            }
        }
        mats_.push_back(solve_full_column_rank(std::move(a), std::move(b)));
        bases_.push_back(std::move(bn));
    }
    mats_d_.resize(mats_.size());
    for (std::size_t n = 0; n < mats_.size(); ++n) {
        for (const auto& row : mats_[n]) {
            std::vector<double> rd;
            rd.reserve(row.size());
            for (const auto& v : row) rd.push_back(v.to_double());
            mats_d_[n].push_back(std::move(rd));
        }
    }
}

const EMat& IntertwineTable::matrix(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("degree exceeds intertwine table");
    return mats_[n];
}

const std::vector<std::vector<double>>& IntertwineTable::matrix_d(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("degree exceeds intertwine table");
    return mats_d_[n];
}

MPoly IntertwineTable::apply(const MPoly& p) const {
    if (p.dim() != ctx_->dim()) throw std::invalid_argument("polynomial dimension mismatch");
    if (p.degree() > n_max()) throw std::out_of_range("degree exceeds intertwine table");
    MPoly out(p.dim());
    for (int n = 0; n <= p.degree(); ++n) {
        MPoly part = p.homogeneous_part(n);
        if (part.is_zero()) continue;
        auto idx = index_of(bases_[n]);
        EVec c = coords_in(part, idx, bases_[n].size());
        EVec y = emat_apply(mats_[n], c);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out.add_term(bases_[n][j], y[j]);
    }
    return out;
}

double apply_V_linear_form(const IntertwineTable& table, const std::vector<double>& coeffs,
                           const std::vector<double>& xi, const std::vector<double>& x) {
    int d = table.context().dim();
    if (static_cast<int>(xi.size()) != d || static_cast<int>(x.size()) != d)
        throw std::invalid_argument("point dimension mismatch");
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg > table.n_max()) throw std::out_of_range("degree exceeds intertwine table");
    double total = 0;
    for (int k = 0; k <= deg; ++k) {
        if (coeffs[k] == 0.0) continue;
        auto exps = monomial_basis_exponents(k, d);
        // <xi, y>^k = sum_alpha multinomial(k; alpha) xi^alpha y^alpha
        std::vector<double> c(exps.size());
        for (std::size_t j = 0; j < exps.size(); ++j) {
            double m = 1.0;
            int used = 0;
            for (int t = 0; t < d; ++t) {
                for (int e = 1; e <= exps[j][t]; ++e) {
                    m *= static_cast<double>(++used) / e;
                    m *= xi[t];
                }
            }
            c[j] = m;
        }
        const auto& mat = table.matrix_d(k);
        double val = 0;
        for (std::size_t r = 0; r < mat.size(); ++r) {
            double y = 0;
            for (std::size_t j = 0; j < c.size(); ++j) y += mat[r][j] * c[j];
            double mono = 1.0;
            for (int t = 0; t < d; ++t)
                for (int e = 0; e < exps[r][t]; ++e) mono *= x[t];
            val += y * mono;
        }
        total += coeffs[k] * val;
    }
    return total;
}

double truncated_V(const IntertwineTable& table, const std::vector<double>& xi,
                   const FunctionHandle& g, const std::vector<double>& x, double tol) {
    auto norm = [](const std::vector<double>& v) {
        double s = 0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    };
    if (std::abs(norm(xi) - 1.0) > 1e-12 || std::abs(norm(x) - 1.0) > 1e-12)
        throw std::invalid_argument("truncated_V requires unit vectors");
    if (g.poly_coeffs) {
        if (static_cast<int>(g.poly_coeffs->size()) - 1 > table.n_max())
            throw std::out_of_range("polynomial degree exceeds intertwine table");
        return apply_V_linear_form(table, *g.poly_coeffs, xi, x);
    }
    // Approximate g by a Cesaro mean at lambda_kappa with delta = lambda + 1;
    // positivity of the representing measure turns the sup-norm error of the
    // approximant into the same bound on the result.
    double lambda = to_double(lambda_kappa(table.context().spec()));
    double delta = lambda + 1;
    int n_cap = table.n_max();
    GegenbauerSeries series = expand(g, lambda, n_cap);
    double achieved = std::numeric_limits<double>::infinity();
    for (int n = std::min(8, n_cap);; n = std::min(2 * n, n_cap)) {
        CesaroParams params{delta, n};
        achieved = uniform_error(g, series, params, 257);
        if (achieved <= tol)
            return apply_V_linear_form(table, cesaro_poly_coeffs(series, params), xi, x);
        if (n == n_cap) break;
    }
    throw ToleranceError("truncated_V: tolerance unreachable within degree budget, achieved " +
                             std::to_string(achieved),
                         achieved);
}

}  // namespace dunkl
