#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dunkl/linalg.hpp"
#include "dunkl/mpoly.hpp"

using namespace dunkl;

TEST_CASE("text format round-trips with the printer") {
    for (const char* text : {"2*x1^2*x2 - 1/3*x3", "x1", "-x2^5", "1", "0",
                             "1/2*x1^3 + x1*x2*x3 - 7*x3^2"}) {
        MPoly p = parse_mpoly(text, 3);
        std::string printed = p.is_zero() ? "0" : p.str();
        CHECK(parse_mpoly(printed, 3) == p);
    }
}

TEST_CASE("random polynomials round-trip through print/parse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-6, 6), expo(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        MPoly p(3);
        for (int t = 0; t < 6; ++t) {
            Mono m = {expo(rng), expo(rng), expo(rng)};
            p.add_term(m, ExactReal(Rational(coef(rng), 1 + expo(rng))));
        }
        std::string printed = p.is_zero() ? "0" : p.str();
        CHECK(parse_mpoly(printed, 3) == p);
    }
}

TEST_CASE("partial derivatives and evaluation") {
    MPoly p = parse_mpoly("2*x1^2*x2 - 1/3*x3", 3);
    CHECK(p.partial(1) == parse_mpoly("4*x1*x2", 3));
    CHECK(p.partial(2) == parse_mpoly("2*x1^2", 3));
    CHECK(p.partial(3) == parse_mpoly("-1/3", 3));
    CHECK(p.evaluate_exact({ExactReal(1), ExactReal(2), ExactReal(3)}) ==
          ExactReal(3));  // 4 - 1
    CHECK(p.evaluate({1.0, 2.0, 3.0}) == doctest::Approx(3.0));
}

TEST_CASE("monomial basis counts and order") {
    auto b = monomial_basis_exponents(3, 2);
    REQUIRE(b.size() == 4);  // C(4,1)
    CHECK(b.front() == Mono{3, 0});
    CHECK(b.back() == Mono{0, 3});
    CHECK(monomial_basis_exponents(4, 3).size() == 15);  // C(6,2)
}

TEST_CASE("division by a linear form is exact or loudly fails") {
    // (x1^2 - x2^2) / (x1 + x2) = x1 - x2
    MPoly p = parse_mpoly("x1^2 - x2^2", 2);
    MPoly q = divide_by_linear_form(p, {ExactReal(1), ExactReal(1)});
    CHECK(q == parse_mpoly("x1 - x2", 2));
    CHECK_THROWS_AS(divide_by_linear_form(parse_mpoly("x1^2 + x2^2", 2),
                                          {ExactReal(1), ExactReal(1)}),
                    std::logic_error);
}

TEST_CASE("division round-trips against multiplication") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2);
    EVec v = {ExactReal(2), ExactReal(-1), ExactReal(3)};
    MPoly lin(3);
    lin.add_term({1, 0, 0}, v[0]);
    lin.add_term({0, 1, 0}, v[1]);
    lin.add_term({0, 0, 1}, v[2]);
    for (int trial = 0; trial < 30; ++trial) {
        MPoly q(3);
        for (int t = 0; t < 5; ++t)
            q.add_term({expo(rng), expo(rng), expo(rng)}, ExactReal(coef(rng)));
        CHECK(divide_by_linear_form(lin * q, v) == q);
    }
}

TEST_CASE("substitute_linear_form builds g(<xi,x>)") {
    // g(t) = t^2, xi = (1,2): (x1 + 2 x2)^2
    MPoly p = substitute_linear_form({ExactReal(0), ExactReal(0), ExactReal(1)},
                                     {ExactReal(1), ExactReal(2)});
    CHECK(p == parse_mpoly("x1^2 + 4*x1*x2 + 4*x2^2", 2));
}

TEST_CASE("homogeneous parts partition a polynomial") {
    MPoly p = parse_mpoly("1 + x1 + x1*x2 + x2^3", 2);
    MPoly sum(2);
    for (int n = 0; n <= p.degree(); ++n) sum += p.homogeneous_part(n);
    CHECK(sum == p);
    CHECK(p.homogeneous_part(2).is_homogeneous());
}
