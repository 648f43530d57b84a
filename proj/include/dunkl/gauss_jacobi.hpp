// Gauss-Jacobi quadrature on [-1,1] for the weight (1-x)^alpha (1+x)^beta,
// via Golub-Welsch on the symmetric Jacobi recurrence matrix with a Newton
// polish of the nodes.
#pragma once

#include <vector>

namespace dunkl {

struct GaussRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // positive
    double mass() const;          // sum of weights
};

GaussRule gauss_jacobi(int n, double alpha, double beta);

inline GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

// Deterministic pairwise summation.
double pairwise_sum(const std::vector<double>& v);

}  // namespace dunkl
