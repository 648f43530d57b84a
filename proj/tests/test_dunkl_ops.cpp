#include <doctest.h>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/mpoly.hpp"
#include "dunkl/root_system.hpp"

using namespace dunkl;

namespace {
Rational rat(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("D_1 on the coordinate functions of Z2^2") {
    DunklContext ctx(build_z2(2, {rat("1/2"), rat("1/2")}));
    MPoly x1 = MPoly::variable(2, 1), x2 = MPoly::variable(2, 2);
    // D_1 x1 = 1 + 2 kappa_1 = 2
    CHECK(dunkl_apply(ctx, 1, x1) == MPoly(2, ExactReal(2)));
    CHECK(dunkl_apply(ctx, 1, x2).is_zero());
    CHECK(dunkl_apply(ctx, 2, x2) == MPoly(2, ExactReal(2)));
}

TEST_CASE("Dunkl Laplacian on x1^2 - x2^2 detects unequal multiplicities") {
    MPoly p = parse_mpoly("x1^2 - x2^2", 2);
    {
        DunklContext ctx(build_z2(2, {rat("1/2"), rat("1/2")}));
        CHECK(dunkl_laplacian(ctx, p).is_zero());
    }
    {
        DunklContext ctx(build_z2(2, {rat("1/3"), rat("2")}));
        // 4 (kappa_1 - kappa_2) = 4 (1/3 - 2) = -20/3
        CHECK(dunkl_laplacian(ctx, p) == MPoly(2, ExactReal(rat("-20/3"))));
    }
}

TEST_CASE("Laplacian kills degree <= 1") {
    DunklContext ctx(build_i2(3, {rat("1")}));
    CHECK(dunkl_laplacian(ctx, MPoly(2, ExactReal(5))).is_zero());
    CHECK(dunkl_laplacian(ctx, MPoly::variable(2, 1)).is_zero());
    CHECK(dunkl_laplacian(ctx, MPoly::variable(2, 2)).is_zero());
}

TEST_CASE("kappa = 0 degenerates to the partial derivative") {
    DunklContext ctx(build_z2(3, {rat("0"), rat("0"), rat("0")}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& mono : monomial_basis(n, 3))
            for (int i = 1; i <= 3; ++i) CHECK(dunkl_apply(ctx, i, mono) == mono.partial(i));
}

TEST_CASE("linearity of D_i") {
    DunklContext ctx(build_i2(4, {rat("2/3"), rat("1")}));
    MPoly p = parse_mpoly("x1^3 - x2^2", 2), q = parse_mpoly("x1*x2 + 1", 2);
    ExactReal a(rat("3/7")), b(rat("-2"));
    for (int i = 1; i <= 2; ++i) {
        MPoly lhs = dunkl_apply(ctx, i, p.scaled(a) + q.scaled(b));
        MPoly rhs = dunkl_apply(ctx, i, p).scaled(a) + dunkl_apply(ctx, i, q).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homogeneous degree drops by one") {
    DunklContext ctx(build_i2(3, {rat("1/2")}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& mono : monomial_basis(n, 2))
            for (int i = 1; i <= 2; ++i) {
                MPoly img = dunkl_apply(ctx, i, mono);
                if (!img.is_zero()) {
                    CHECK(img.is_homogeneous());
                    CHECK(img.degree() == n - 1);
                }
            }
}

TEST_CASE("commutativity D_i D_j = D_j D_i on I2(6)") {
    DunklContext ctx(build_i2(6, {rat("1/2"), rat("1")}));
    for (int n = 0; n <= 6; ++n)
        for (const auto& mono : monomial_basis(n, 2)) {
            MPoly a = dunkl_apply(ctx, 1, dunkl_apply(ctx, 2, mono));
            MPoly b = dunkl_apply(ctx, 2, dunkl_apply(ctx, 1, mono));
            CHECK(a == b);
        }
}

TEST_CASE("inexact specs are rejected by the context") {
    auto spec = build_i2(5, {rat("1")});
    CHECK_THROWS(DunklContext{spec});
}
