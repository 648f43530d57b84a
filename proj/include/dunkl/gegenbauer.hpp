// Gegenbauer polynomials C_n^lambda, the normalizing constant c_lambda,
// expansion coefficients b_n, and Cesaro (C,delta) means with convergence
// diagnostics.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

// A continuous function on [-1,1]. Declared kinks drive the split-panel
// quadrature; an attached polynomial form switches consumers to the exact
// polynomial path.
struct FunctionHandle {
    std::function<double(double)> eval;
    bool smooth = true;
    std::vector<double> kinks;                       // interior points of (-1,1)
    std::optional<std::vector<double>> poly_coeffs;  // coefficients of t^k

    double operator()(double t) const;
    static FunctionHandle polynomial(std::vector<double> coeffs);
};

double gegenbauer_eval(int n, double lambda, double t);
double gegenbauer_at_one(int n, double lambda);  // C_n^lambda(1)
std::vector<double> gegenbauer_coeffs(int n, double lambda);
std::vector<Rational> gegenbauer_coeffs_exact(int n, const Rational& lambda);

// 1 / integral of (1-t^2)^(lambda-1/2); computed in closed Beta form and
// cross-checked against the Gauss-Jacobi mass to 1e-13.
double c_lambda(double lambda);

// b_n of the Gegenbauer expansion of g at index lambda.
double coeff_b(const FunctionHandle& g, double lambda, int n, int quad_order);

struct GegenbauerSeries {
    double lambda = 0;
    std::vector<double> b;  // b_0 .. b_N
    double c_lam = 0;
    int quad_order = 0;
};

struct CesaroParams {
    double delta;
    int order;  // truncation order N
};

int default_quad_order(int n_max, const FunctionHandle& g);
GegenbauerSeries expand(const FunctionHandle& g, double lambda, int n_max, int quad_order = 0);

// A_n^delta = binom(n+delta, n), by the multiplicative recurrence.
double cesaro_coefficient(int n, double delta);

double cesaro_mean(const GegenbauerSeries& series, const CesaroParams& params, double t);

// Monomial coefficients of t -> S_N^delta g(t).
std::vector<double> cesaro_poly_coeffs(const GegenbauerSeries& series, const CesaroParams& params);

// Max of |g - S_N^delta g| over a Chebyshev-clustered grid.
double uniform_error(const FunctionHandle& g, const GegenbauerSeries& series,
                     const CesaroParams& params, int grid_size);

}  // namespace dunkl
