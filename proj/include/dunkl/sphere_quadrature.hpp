// Weighted quadrature on the unit sphere against w_kappa d omega / sigma_d^kappa.
//
// Z2^d weights use an iterated product of one-dimensional Gauss-Jacobi rules
// in spherical coordinates (exact for polynomials up to the declared degree);
// d = 2 root systems split the circle at the root hyperplane angles and use
// per-arc Gauss-Jacobi rules absorbing the endpoint algebraic factors.
#pragma once

#include <functional>
#include <vector>

#include "dunkl/root_system.hpp"

namespace dunkl {

struct WeightSpec {
    RootSystemSpec spec;
};

struct SphereRule {
    std::vector<std::vector<double>> nodes;  // unit vectors
    std::vector<double> weights;             // normalized, sum = 1
    double mass = 0;                         // sigma_d^kappa: the unnormalized rule mass
    int exactness_degree = 0;
};

using SphereFn = std::function<double(const std::vector<double>&)>;

// w_kappa(x) = prod over R_+ of |<v,x>|^(2 kappa(v))
double weight_eval(const WeightSpec& w, const std::vector<double>& x);

SphereRule build_rule(const WeightSpec& w, int target_degree);

// <f,h>_kappa for real-valued f, h. Pure weighted reduction over the nodes
// with deterministic pairwise summation.
double inner_product(const SphereRule& rule, const SphereFn& f, const SphereFn& h);

}  // namespace dunkl
