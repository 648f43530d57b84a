// The fundamentality test for {V_kappa(x; g) : x in S^(d-1)} in C(S^(d-1)):
// lambda_kappa, the Gegenbauer coefficient criterion, and the generic
// summability-matrix column-limit estimator.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dunkl/gegenbauer.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

// lambda_kappa = sum over R_+ of kappa(v) + (d-2)/2. Rejects the degenerate
// configuration d = 2 with kappa identically zero.
Rational lambda_kappa(const RootSystemSpec& spec);

struct FundamentalityReport {
    double lambda = 0;
    int n_max = 0;
    double zero_threshold = 0;  // relative
    double scale = 1;           // sup of sampled |g|
    int quad_order = 0;
    std::vector<double> b;          // b_0 .. b_n_max
    std::vector<bool> nonzero;      // per-index verdict
    std::vector<int> witnesses;     // exactly the numerically-zero indices
    bool fundamental_up_to_nmax = false;
};

FundamentalityReport check_fundamentality(const FunctionHandle& g, const RootSystemSpec& spec,
                                          int n_max = 32, double zero_threshold = 1e-10,
                                          int quad_order = 0);

struct ColumnLimit {
    int m = 0;
    double limit = 0;
    double residual = 0;  // change in the last extrapolation step
    bool converged = false;
};

// Estimates lim_n A(n, m) for m <= m_max by Richardson extrapolation over
// the geometric ladder n = n0 * 2^k, k < ladder.
std::vector<ColumnLimit> summability_limits(const std::function<double(long, int)>& a, int m_max,
                                            long n0 = 64, int ladder = 8);

}  // namespace dunkl
