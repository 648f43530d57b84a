#include "dunkl/gegenbauer.hpp"

#include <cmath>
#include <stdexcept>

#include "dunkl/gauss_jacobi.hpp"

namespace dunkl {

double FunctionHandle::operator()(double t) const {
    if (poly_coeffs) {
        double acc = 0;
        for (auto it = poly_coeffs->rbegin(); it != poly_coeffs->rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }
    return eval(t);
}

FunctionHandle FunctionHandle::polynomial(std::vector<double> coeffs) {
    FunctionHandle h;
    h.smooth = true;
    h.poly_coeffs = std::move(coeffs);
    return h;
}

double gegenbauer_eval(int n, double lambda, double t) {
    if (lambda <= 0) throw std::invalid_argument("Gegenbauer index must be positive");
    if (n < 0) throw std::invalid_argument("negative degree");
    if (n == 0) return 1.0;
    double c0 = 1.0, c1 = 2 * lambda * t;
    for (int k = 2; k <= n; ++k) {
        double c2 = (2 * (k + lambda - 1) * t * c1 - (k + 2 * lambda - 2) * c0) / k;
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

double gegenbauer_at_one(int n, double lambda) {
    // C_n^lambda(1) = binom(n + 2*lambda - 1, n)
    double v = 1.0;
    for (int j = 0; j < n; ++j) v *= (2 * lambda + j) / (j + 1);
    return v;
}

std::vector<double> gegenbauer_coeffs(int n, double lambda) {
    if (lambda <= 0) throw std::invalid_argument("Gegenbauer index must be positive");
    std::vector<double> c0{1.0};
    if (n == 0) return c0;
    std::vector<double> c1{0.0, 2 * lambda};
    for (int k = 2; k <= n; ++k) {
        std::vector<double> c2(k + 1, 0.0);
        for (std::size_t j = 0; j < c1.size(); ++j)
            c2[j + 1] += 2 * (k + lambda - 1) * c1[j] / k;
        for (std::size_t j = 0; j < c0.size(); ++j)
            c2[j] -= (k + 2 * lambda - 2) * c0[j] / k;
        c0 = std::move(c1);
        c1 = std::move(c2);
    }
    return c1;
}

std::vector<Rational> gegenbauer_coeffs_exact(int n, const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("Gegenbauer index must be positive");
    std::vector<Rational> c0{Rational(1)};
    if (n == 0) return c0;
    std::vector<Rational> c1{Rational(0), 2 * lambda};
    for (int k = 2; k <= n; ++k) {
        std::vector<Rational> c2(k + 1, Rational(0));
        for (std::size_t j = 0; j < c1.size(); ++j)
            c2[j + 1] += Rational(2) * (k + lambda - 1) * c1[j] / k;
        for (std::size_t j = 0; j < c0.size(); ++j)
            c2[j] -= (k + 2 * lambda - 2) * c0[j] / k;
        c0 = std::move(c1);
        c1 = std::move(c2);
    }
    return c1;
}

double c_lambda(double lambda) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    double a = lambda - 0.5;
    double closed = 1.0 / std::exp((2 * a + 1) * std::log(2.0) + 2 * std::lgamma(a + 1) -
                                   std::lgamma(2 * a + 2));
    double quad = 1.0 / gauss_jacobi(64, a, a).mass();
    if (std::abs(closed - quad) > 1e-13 * std::abs(closed))
        throw std::runtime_error("c_lambda cross-check failed");
    return closed;
}

namespace {

// Integral of f(t) * (1-t^2)^(lambda-1/2) over [-1,1], splitting at the
// declared kinks. Endpoint panels absorb their algebraic factor through a
// one-sided Gauss-Jacobi rule; interior panels use Gauss-Legendre.
double weighted_integral(const std::function<double(double)>& f, double lambda,
                         const std::vector<double>& kinks, int order) {
    double a = lambda - 0.5;
    if (kinks.empty()) {
        auto rule = gauss_jacobi(order, a, a);
        std::vector<double> terms(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            terms[i] = rule.weights[i] * f(rule.nodes[i]);
        return pairwise_sum(terms);
    }
    std::vector<double> pts{-1.0};
    for (double k : kinks)
        if (k > -1.0 && k < 1.0) pts.push_back(k);
    pts.push_back(1.0);
    double total = 0;
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
        double lo = pts[p], hi = pts[p + 1];
        double half = (hi - lo) / 2, mid = (hi + lo) / 2;
        bool sing_left = (p == 0), sing_right = (p + 2 == pts.size());
        auto rule = gauss_jacobi(order, sing_right ? a : 0.0, sing_left ? a : 0.0);
        double scale = half;
        if (sing_left) scale *= std::pow(half, a);   // (1+t) = half*(1+u)
        if (sing_right) scale *= std::pow(half, a);  // (1-t) = half*(1-u)
        std::vector<double> terms(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double t = half * rule.nodes[i] + mid;
            double fac = 1.0;
            if (!sing_left) fac *= std::pow(1.0 + t, a);
            if (!sing_right) fac *= std::pow(1.0 - t, a);
            terms[i] = rule.weights[i] * fac * f(t);
        }
        total += scale * pairwise_sum(terms);
    }
    return total;
}

}  // namespace

double coeff_b(const FunctionHandle& g, double lambda, int n, int quad_order) {
    if (quad_order <= 0) quad_order = default_quad_order(n, g);
    auto f = [&](double t) { return g(t) * gegenbauer_eval(n, lambda, t); };
    double integral = weighted_integral(f, lambda, g.smooth ? std::vector<double>{} : g.kinks,
                                        quad_order);
    return c_lambda(lambda) / gegenbauer_at_one(n, lambda) * integral;
}

int default_quad_order(int n_max, const FunctionHandle& g) {
    int deg_proxy = g.poly_coeffs ? static_cast<int>(g.poly_coeffs->size()) : 64;
    return 2 * (n_max + deg_proxy) + 16;
}

GegenbauerSeries expand(const FunctionHandle& g, double lambda, int n_max, int quad_order) {
    if (quad_order <= 0) quad_order = default_quad_order(n_max, g);
    GegenbauerSeries s;
    s.lambda = lambda;
    s.c_lam = c_lambda(lambda);
    s.quad_order = quad_order;
    s.b.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) s.b[n] = coeff_b(g, lambda, n, quad_order);
    return s;
}

double cesaro_coefficient(int n, double delta) {
    if (n < 0) throw std::invalid_argument("negative Cesaro index");
    double v = 1.0;
    for (int k = 1; k <= n; ++k) v *= (k + delta) / k;
    return v;
}

double cesaro_mean(const GegenbauerSeries& series, const CesaroParams& params, double t) {
    int n = params.order;
    if (n >= static_cast<int>(series.b.size()))
        throw std::out_of_range("Cesaro order exceeds available coefficients");
    if (params.delta <= 0) throw std::invalid_argument("delta must be positive");
    double lambda = series.lambda;
    std::vector<double> A(n + 1);
    A[0] = 1.0;
    for (int k = 1; k <= n; ++k) A[k] = A[k - 1] * (k + params.delta) / k;
    std::vector<double> terms(n + 1);
    double c0 = 1.0, c1 = 2 * lambda * t;
    for (int m = 0; m <= n; ++m) {
        double cm;
        if (m == 0)
            cm = 1.0;
        else if (m == 1)
            cm = c1;
        else {
            double c2 = (2 * (m + lambda - 1) * t * c1 - (m + 2 * lambda - 2) * c0) / m;
            c0 = c1;
            c1 = c2;
            cm = c2;
        }
        terms[m] = A[n - m] * series.b[m] * ((m + lambda) / lambda) * cm;
    }
    return pairwise_sum(terms) / A[n];
}

std::vector<double> cesaro_poly_coeffs(const GegenbauerSeries& series,
                                       const CesaroParams& params) {
    int n = params.order;
    if (n >= static_cast<int>(series.b.size()))
        throw std::out_of_range("Cesaro order exceeds available coefficients");
    double lambda = series.lambda;
    std::vector<double> A(n + 1);
    A[0] = 1.0;
    for (int k = 1; k <= n; ++k) A[k] = A[k - 1] * (k + params.delta) / k;
    std::vector<double> out(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        double w = A[n - m] / A[n] * series.b[m] * ((m + lambda) / lambda);
        if (w == 0.0) continue;
        auto cm = gegenbauer_coeffs(m, lambda);
        for (std::size_t j = 0; j < cm.size(); ++j) out[j] += w * cm[j];
    }
    return out;
}

double uniform_error(const FunctionHandle& g, const GegenbauerSeries& series,
                     const CesaroParams& params, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("grid size must be at least 2");
    const double pi = std::acos(-1.0);
    double worst = 0;
    for (int j = 0; j < grid_size; ++j) {
        double t = std::cos(pi * j / (grid_size - 1));
        worst = std::max(worst, std::abs(g(t) - cesaro_mean(series, params, t)));
    }
    return worst;
}

}  // namespace dunkl
