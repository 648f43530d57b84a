// Exact multivariate polynomials: the carrier for all symbolic work
// (Dunkl operators, intertwining, harmonic kernels).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

// Exponent multi-index; length equals the ambient dimension.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded order: lower total degree first; within a degree, lexicographically
// descending exponents, so iteration within a degree matches monomial_basis.
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const {
        int dx = mono_degree(x), dy = mono_degree(y);
        if (dx != dy) return dx < dy;
        return x > y;
    }
};

class MPoly {
public:
    using TermMap = std::map<Mono, ExactReal, MonoLess>;

    explicit MPoly(int dim = 1);
    MPoly(int dim, const ExactReal& constant);

    static MPoly variable(int dim, int axis);  // axis is 1-based
    static MPoly monomial(const Mono& exponents, const ExactReal& coeff);

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    // Canonical form: zero coefficients are never stored.
    void add_term(const Mono& m, const ExactReal& c);
    ExactReal coeff(const Mono& m) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
    friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }
    friend MPoly operator*(const MPoly& p, const MPoly& q);
    friend bool operator==(const MPoly& p, const MPoly& q) {
        return p.dim_ == q.dim_ && p.terms_ == q.terms_;
    }

    MPoly scaled(const ExactReal& c) const;
    MPoly partial(int axis) const;  // axis is 1-based

    ExactReal evaluate_exact(const std::vector<ExactReal>& x) const;
    double evaluate(const std::vector<double>& x) const;

    MPoly homogeneous_part(int n) const;

    // x_j -> sum_k rows[j][k] x_k, rows is dim x dim.
    MPoly substitute_linear(const std::vector<std::vector<ExactReal>>& rows) const;

    std::string str() const;

private:
    void check_dim(const MPoly& o) const;

    int dim_;
    TermMap terms_;
};

// All degree-n monomials in d variables, lexicographically descending
// exponents. Size C(n+d-1, d-1).
std::vector<Mono> monomial_basis_exponents(int n, int d);
std::vector<MPoly> monomial_basis(int n, int d);

// The d-variate polynomial x -> g(<xi, x>) for univariate g given by its
// coefficients g_coeffs[k] of t^k.
MPoly substitute_linear_form(const std::vector<ExactReal>& g_coeffs,
                             const std::vector<ExactReal>& xi);

// Exact division of p by the linear form <x, v>. Throws std::logic_error if
// the division leaves a remainder.
MPoly divide_by_linear_form(const MPoly& p, const std::vector<ExactReal>& v);

// Text format round-tripping with str(): terms like "2*x1^2*x2 - 1/3*x3".
// Only rational coefficients are parseable.
MPoly parse_mpoly(const std::string& text, int dim);

}  // namespace dunkl
