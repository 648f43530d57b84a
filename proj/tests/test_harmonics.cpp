#include <doctest.h>

#include <memory>
#include <random>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/sphere_quadrature.hpp"

using namespace dunkl;

namespace {
Rational rat(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("dimension formula on classical values") {
    CHECK(harmonic_dimension(0, 3) == 1);
    CHECK(harmonic_dimension(1, 3) == 3);
    CHECK(harmonic_dimension(2, 3) == 5);  // 2n+1 for d = 3
    CHECK(harmonic_dimension(5, 3) == 11);
    CHECK(harmonic_dimension(4, 2) == 2);  // 2 for d = 2, n >= 1
}

TEST_CASE("kernel members are exactly harmonic and homogeneous") {
    for (const auto& spec : {build_z2(2, {rat("1/3"), rat("2")}), build_i2(3, {rat("1")})}) {
        DunklContext ctx(spec);
        for (int n = 0; n <= 6; ++n) {
            auto kernel = harmonic_kernel(ctx, n);
            CHECK(kernel.size() == harmonic_dimension(n, spec.dim));
            for (const auto& p : kernel) {
                CHECK(p.is_homogeneous());
                CHECK(p.degree() == n);
                CHECK(dunkl_laplacian(ctx, p).is_zero());
            }
        }
    }
}

TEST_CASE("degree 0 and 1 kernels are the monomials") {
    DunklContext ctx(build_z2(3, {rat("1"), rat("1"), rat("1")}));
    CHECK(harmonic_kernel(ctx, 0).size() == 1);
    auto k1 = harmonic_kernel(ctx, 1);
    REQUIRE(k1.size() == 3);
    for (const auto& p : k1) CHECK(p.degree() == 1);
}

TEST_CASE("orthonormal basis achieves a small gram residual") {
    auto spec = build_z2(3, {rat("1"), rat("1"), rat("1")});
    DunklContext ctx(spec);
    SphereRule rule = build_rule(WeightSpec{spec}, 20);
    for (int n = 0; n <= 5; ++n) {
        auto basis = orthonormal_basis(ctx, rule, n);
        CHECK(basis.size() == harmonic_dimension(n, 3));
        CHECK(basis.gram_residual <= 1e-10);
        CHECK(basis.min_pivot > 0);
    }
}

TEST_CASE("insufficient quadrature exactness is rejected") {
    auto spec = build_z2(2, {rat("1/2"), rat("1/2")});
    DunklContext ctx(spec);
    SphereRule rule = build_rule(WeightSpec{spec}, 6);
    CHECK_THROWS(orthonormal_basis(ctx, rule, 5));
}

TEST_CASE("cross-degree orthogonality on a dihedral weight") {
    auto spec = build_i2(4, {rat("1/2"), rat("3/2")});
    DunklContext ctx(spec);
    SphereRule rule = build_rule(WeightSpec{spec}, 16);
    std::vector<HarmonicBasis> bases;
    for (int n = 0; n <= 5; ++n) bases.push_back(orthonormal_basis(ctx, rule, n));
    CHECK(verify_orthogonality_across_degrees(bases, rule) <= 1e-10);
}

TEST_CASE("kernel identity residual is small in the classical d = 3 case") {
    auto spec = build_z2(3, {rat("0"), rat("0"), rat("0")});
    auto ctx = std::make_shared<DunklContext>(spec);
    IntertwineTable table(ctx, 4);
    SphereRule rule = build_rule(WeightSpec{spec}, 12);
    std::mt19937_64 rng(123);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto unit = [&] {
        std::vector<double> x(3);
        double n2 = 0;
        for (auto& c : x) {
            c = gauss(rng);
            n2 += c * c;
        }
        for (auto& c : x) c /= std::sqrt(n2);
        return x;
    };
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
    for (int p = 0; p < 50; ++p) pairs.emplace_back(unit(), unit());
    for (int n = 0; n <= 4; ++n) {
        auto basis = orthonormal_basis(*ctx, rule, n);
        CHECK(kernel_identity_residual(table, basis, 0.5, pairs) <= 1e-10);
    }
}
