// Kappa-spherical harmonics: exact kernels of the Dunkl Laplacian on P_n^d,
// numerically orthonormalized bases under <.,.>_kappa, cross-degree
// orthogonality scans, and the addition-type kernel identity residual.
#pragma once

#include <utility>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/sphere_quadrature.hpp"

namespace dunkl {

struct HarmonicBasis {
    int degree = 0;
    std::vector<Mono> exponents;                    // monomial basis of P_n^d
    std::vector<MPoly> kernel;                      // exact rational kernel basis
    std::vector<std::vector<double>> ortho_coeffs;  // orthonormal combos, monomial coords
    double gram_residual = 0;
    // Modified Gram-Schmidt pivot norms, largest/smallest ratio bounds the
    // conditioning of the change of basis.
    double min_pivot = 0, max_pivot = 0;

    std::size_t size() const { return ortho_coeffs.size(); }
    double eval_ortho(std::size_t j, const std::vector<double>& x) const;
};

// Exact basis of ker(Delta_kappa : P_n^d -> P_{n-2}^d).
std::vector<MPoly> harmonic_kernel(const DunklContext& ctx, int n);

// Dimension formula N(n,d) = dim P_n - dim P_{n-2}.
std::size_t harmonic_dimension(int n, int d);

HarmonicBasis orthonormal_basis(const DunklContext& ctx, const SphereRule& rule, int n);

// Max |<P,Q>_kappa| over members of bases of distinct degrees.
double verify_orthogonality_across_degrees(const std::vector<HarmonicBasis>& bases,
                                           const SphereRule& rule);

// Max over sample pairs of |V(x; C_n^lambda, y) - lambda/(n+lambda) sum_j S_j(x) S_j(y)|.
double kernel_identity_residual(
    const IntertwineTable& table, const HarmonicBasis& basis, double lambda,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& sample_pairs);

}  // namespace dunkl
