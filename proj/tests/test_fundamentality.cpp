#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dunkl/fundamentality.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/root_system.hpp"

using namespace dunkl;

namespace {
Rational rat(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("lambda_kappa on reference configurations") {
    CHECK(lambda_kappa(build_z2(2, {rat("1/2"), rat("1/2")})) == Rational(1));
    CHECK(lambda_kappa(build_z2(3, {rat("1"), rat("1"), rat("1")})) == Rational(7, 2));
    // I2(3), kappa = 1: 3 positive roots, lambda = 3.
    CHECK(lambda_kappa(build_i2(3, {rat("1")})) == Rational(3));
    // I2(4), kappa = (1/2, 3/2): 2 * 1/2 + 2 * 3/2 = 4.
    CHECK(lambda_kappa(build_i2(4, {rat("1/2"), rat("3/2")})) == Rational(4));
}

TEST_CASE("degenerate d = 2 configuration is rejected") {
    CHECK_THROWS_AS(lambda_kappa(build_z2(2, {rat("0"), rat("0")})), std::invalid_argument);
}

TEST_CASE("witness semantics: report is consistent with the verdict") {
    auto spec = build_z2(2, {rat("1/2"), rat("1/2")});
    FunctionHandle g;
    g.eval = [](double t) { return std::exp(t); };
    auto rep = check_fundamentality(g, spec, 12);
    CHECK(rep.b.size() == 13);
    CHECK(rep.fundamental_up_to_nmax == rep.witnesses.empty());
    for (int n = 0; n <= 12; ++n) {
        bool witnessed = false;
        for (int w : rep.witnesses) witnessed |= (w == n);
        CHECK(witnessed == !rep.nonzero[n]);
    }
}

TEST_CASE("a killed Gegenbauer mode is witnessed exactly") {
    auto spec = build_z2(2, {rat("1/2"), rat("1/2")});
    auto g = FunctionHandle::polynomial(gegenbauer_coeffs(4, 1.0));
    auto rep = check_fundamentality(g, spec, 10);
    CHECK_FALSE(rep.fundamental_up_to_nmax);
    REQUIRE(rep.witnesses.size() == 10);
    for (int w : rep.witnesses) CHECK(w != 4);
    CHECK(rep.b[4] == doctest::Approx(1.0 / 5).epsilon(1e-12));
}

TEST_CASE("low-degree polynomial g is witnessed above its degree") {
    auto spec = build_z2(2, {rat("1/2"), rat("1/2")});
    auto g = FunctionHandle::polynomial({1.0, 2.0, 3.0});
    auto rep = check_fundamentality(g, spec, 8);
    CHECK_FALSE(rep.fundamental_up_to_nmax);
    for (int n = 3; n <= 8; ++n) CHECK_FALSE(rep.nonzero[n]);
}

TEST_CASE("summability limits recover simple column limits") {
    auto a = [](long n, int m) {
        return (1.0 + m) * static_cast<double>(n) / (static_cast<double>(n) + 2.0 + m);
    };
    auto lims = summability_limits(a, 3);
    for (const auto& col : lims) {
        CHECK(col.converged);
        CHECK(col.limit == doctest::Approx(1.0 + col.m).epsilon(1e-9));
    }
}

TEST_CASE("summability limits flag divergent columns") {
    auto a = [](long n, int) { return std::sqrt(static_cast<double>(n)); };
    auto lims = summability_limits(a, 1);
    for (const auto& col : lims) CHECK_FALSE(col.converged);
}
