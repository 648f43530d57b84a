// The Dunkl intertwining operator V_kappa on P_n^d, built degree by degree
// from its defining relations D_i V = V d_i by exact linear solves, and the
// truncated operator V_kappa(xi; g, x) for continuous g.
#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/mpoly.hpp"

namespace dunkl {

// Thrown when the Cesaro approximation cannot reach the requested sup-norm
// tolerance within the table's degree budget.
struct ToleranceError : std::runtime_error {
    ToleranceError(const std::string& msg, double achieved_)
        : std::runtime_error(msg), achieved(achieved_) {}
    double achieved;
};

class IntertwineTable {
public:
    IntertwineTable(std::shared_ptr<const DunklContext> ctx, int n_max);

    const DunklContext& context() const { return *ctx_; }
    int n_max() const { return static_cast<int>(mats_.size()) - 1; }

    // Matrix of V_kappa on P_n^d in monomial_basis order.
    const EMat& matrix(int n) const;
    const std::vector<std::vector<double>>& matrix_d(int n) const;

    MPoly apply(const MPoly& p) const;

private:
    std::shared_ptr<const DunklContext> ctx_;
    std::vector<EMat> mats_;
    std::vector<std::vector<std::vector<double>>> mats_d_;
    std::vector<std::vector<Mono>> bases_;
};

inline IntertwineTable build_table(std::shared_ptr<const DunklContext> ctx, int n_max) {
    return IntertwineTable(std::move(ctx), n_max);
}

// [V_kappa p](x) for the polynomial p(y) = sum_k coeffs[k] <xi,y>^k, with
// real xi and x. Exact matrices applied in floating point.
double apply_V_linear_form(const IntertwineTable& table, const std::vector<double>& coeffs,
                           const std::vector<double>& xi, const std::vector<double>& x);

// V_kappa(xi; g, x) within tol: polynomial g is evaluated exactly (tol
// ignored); otherwise g is replaced by a Cesaro mean at lambda_kappa with
// sup-error <= tol. Throws ToleranceError when tol is unreachable.
double truncated_V(const IntertwineTable& table, const std::vector<double>& xi,
                   const FunctionHandle& g, const std::vector<double>& x, double tol);

}  // namespace dunkl
