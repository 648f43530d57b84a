#include <doctest.h>

#include <cmath>
#include <vector>

#include "dunkl/gegenbauer.hpp"

using namespace dunkl;

namespace {

// Test-side oracle, independent of coeff_b: for polynomial g with rational
// coefficients and rational lambda, b_n is rational. With the moments
// M_j = int t^j (1-t^2)^(lambda-1/2) dt, the ratios M_(2j)/M_0 obey
// M_(2j)/M_(2j-2) = (2j-1)/(2j+2*lambda), and c_lambda = 1/M_0, so
// b_n = (lambda/(n+lambda)... actually b_n = c_lambda / C_n(1) * sum of
// coefficient-weighted moments, with M_0 cancelling.
Rational moment_ratio(int j2, const Rational& lambda) {
    // M_(2j)/M_0
    Rational r(1);
    for (int j = 1; 2 * j <= j2; ++j) r *= Rational(2 * j - 1) / (Rational(2 * j) + 2 * lambda);
    return r;
}

Rational oracle_b(const std::vector<Rational>& g_coeffs, const Rational& lambda, int n) {
    auto cn = gegenbauer_coeffs_exact(n, lambda);
    // product polynomial g * C_n, then sum coeff * M_j / M_0 over even j
    std::vector<Rational> prod(g_coeffs.size() + cn.size() - 1, Rational(0));
    for (std::size_t i = 0; i < g_coeffs.size(); ++i)
        for (std::size_t j = 0; j < cn.size(); ++j) prod[i + j] += g_coeffs[i] * cn[j];
    Rational integral(0);
    for (std::size_t j = 0; j < prod.size(); j += 2)
        integral += prod[j] * moment_ratio(static_cast<int>(j), lambda);
    // C_n(1) exactly
    Rational cn1(1);
    for (int j = 0; j < n; ++j) cn1 *= (2 * lambda + j) / Rational(j + 1);
    return integral / cn1;
}

}  // namespace

TEST_CASE("recurrence matches the explicit low-degree Gegenbauer polynomials") {
    for (double lambda : {0.5, 1.0, 2.5})
        for (double t : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
            CHECK(gegenbauer_eval(0, lambda, t) == doctest::Approx(1.0));
            CHECK(gegenbauer_eval(1, lambda, t) == doctest::Approx(2 * lambda * t));
            CHECK(gegenbauer_eval(2, lambda, t) ==
                  doctest::Approx(2 * lambda * (1 + lambda) * t * t - lambda).epsilon(1e-14));
            CHECK(gegenbauer_eval(3, lambda, t) ==
                  doctest::Approx(4.0 / 3 * lambda * (1 + lambda) * (2 + lambda) * t * t * t -
                                  2 * lambda * (1 + lambda) * t)
                      .epsilon(1e-13));
        }
}

TEST_CASE("value at one matches the rising-factorial formula") {
    for (double lambda : {0.5, 1.0, 3.5})
        for (int n : {0, 1, 5, 12}) {
            CHECK(gegenbauer_eval(n, lambda, 1.0) ==
                  doctest::Approx(gegenbauer_at_one(n, lambda)).epsilon(1e-12));
        }
}

TEST_CASE("c_lambda closed form on elementary cases") {
    // lambda = 1/2: weight 1, integral 2. lambda = 1: integral pi/2.
    CHECK(c_lambda(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c_lambda(1.0) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
    CHECK(c_lambda(1.5) == doctest::Approx(0.75).epsilon(1e-14));  // int (1-t^2) dt = 4/3
}

TEST_CASE("coeff_b agrees with the exact rational moment oracle") {
    std::vector<Rational> g = {Rational(1, 3), Rational(-2), Rational(0),
                               Rational(5, 7), Rational(1, 2)};
    std::vector<double> gd;
    for (const auto& c : g) gd.push_back(to_double(c));
    auto handle = FunctionHandle::polynomial(gd);
    for (const Rational& lam : {Rational(1), Rational(1, 2), Rational(7, 2)}) {
        double lamd = to_double(lam);
        for (int n = 0; n <= 8; ++n) {
            double want = to_double(oracle_b(g, lam, n));
            CHECK(coeff_b(handle, lamd, n, 0) == doctest::Approx(want).epsilon(1e-13));
        }
    }
}

TEST_CASE("coeff_b of |t| matches the closed form at lambda = 1") {
    // b_n = c_1/C_n(1) int |t| C_n^1(t) sqrt(1-t^2) dt; odd n vanish.
    FunctionHandle g;
    g.eval = [](double t) { return std::abs(t); };
    g.smooth = false;
    g.kinks = {0.0};
    // Direct numerically independent check: high-order split Gauss-Legendre.
    for (int n : {0, 1, 2, 3, 4, 6}) {
        double acc = 0;
        int big = 400;
        for (int half = 0; half < 2; ++half) {
            for (int q = 0; q < big; ++q) {
                // composite midpoint on [0,1] and [-1,0], crude but fine to 1e-8
                double t = (q + 0.5) / big;
                if (half == 1) t = -t;
                acc += std::abs(t) * gegenbauer_eval(n, 1.0, t) * std::sqrt(1 - t * t) / big;
            }
        }
        double want = c_lambda(1.0) / gegenbauer_at_one(n, 1.0) * acc;
        CHECK(coeff_b(g, 1.0, n, 0) == doctest::Approx(want).epsilon(5e-5));
    }
}

TEST_CASE("cesaro coefficients are binomials") {
    // A_n^delta = binom(n + delta, n) for integer delta
    CHECK(cesaro_coefficient(0, 2.0) == doctest::Approx(1.0));
    CHECK(cesaro_coefficient(3, 2.0) == doctest::Approx(10.0));
    CHECK(cesaro_coefficient(5, 1.0) == doctest::Approx(6.0));
    CHECK(cesaro_coefficient(4, 0.5) ==
          doctest::Approx(1.5 * 2.5 * 3.5 * 4.5 / 24).epsilon(1e-14));
}

TEST_CASE("cesaro mean of a polynomial: finite expansion, O(delta deg / N) deficit") {
    auto g = FunctionHandle::polynomial({1.0, -0.5, 0.25, 0.0, 2.0});
    auto series = expand(g, 1.5, 128);
    // Expansion terminates at the degree.
    for (std::size_t n = 5; n < series.b.size(); ++n) CHECK(std::abs(series.b[n]) <= 1e-13);
    // (C,delta) deficit on the surviving modes scales like delta * deg / N.
    double e64 = uniform_error(g, series, {2.5, 64}, 257);
    double e128 = uniform_error(g, series, {2.5, 128}, 257);
    CHECK(e128 <= 0.6 * e64);
    CHECK(uniform_error(g, series, {0.25, 128}, 257) <= 2e-2);
    // cesaro_poly_coeffs agrees with cesaro_mean pointwise.
    auto coeffs = cesaro_poly_coeffs(series, {2.5, 128});
    double t = 0.37, horner = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) horner = horner * t + coeffs[k];
    CHECK(horner == doctest::Approx(cesaro_mean(series, {2.5, 128}, t)).epsilon(1e-10));
}

TEST_CASE("expansion of a smooth function has a fast-decaying tail") {
    FunctionHandle g;
    g.eval = [](double t) { return std::cos(3 * t); };
    auto series = expand(g, 1.0, 48);
    // tail coefficients decay super-exponentially
    CHECK(std::abs(series.b[40]) <= 1e-13);
    CHECK(uniform_error(g, series, {2.0, 48}, 257) <= 0.2);
    CHECK(uniform_error(g, series, {0.1, 48}, 257) <= 5e-2);
}
