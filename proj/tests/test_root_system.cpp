#include <doctest.h>

#include <stdexcept>

#include "dunkl/root_system.hpp"

using namespace dunkl;

namespace {
Rational rat(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("reflection is an exact involution and isometry") {
    EVec v = {ExactReal(1), ExactReal(-1)};
    EVec x = {ExactReal(Rational(3, 7)), ExactReal(Rational(-2, 5))};
    EVec y = reflect(v, x);
    // sigma_{(1,-1)} swaps coordinates.
    CHECK(y[0] == x[1]);
    CHECK(y[1] == x[0]);
    CHECK(reflect(v, y) == x);
    ExactReal nx = x[0] * x[0] + x[1] * x[1];
    ExactReal ny = y[0] * y[0] + y[1] * y[1];
    CHECK(nx == ny);
}

TEST_CASE("reflect fixes the hyperplane and flips the axis") {
    EVec e1 = {ExactReal(1), ExactReal(0)};
    EVec on_plane = {ExactReal(0), ExactReal(5)};
    CHECK(reflect(e1, on_plane) == on_plane);
    EVec x = {ExactReal(2), ExactReal(3)};
    CHECK(reflect(e1, x) == EVec{ExactReal(-2), ExactReal(3)});
}

TEST_CASE("built-in families validate and have the expected group orders") {
    auto z22 = build_z2(2, {rat("1/2"), rat("1/2")});
    CHECK(validate(z22).ok());
    CHECK(generate_group(z22).order() == 4);

    auto i23 = build_i2(3, {rat("1")});
    CHECK(validate(i23).ok());
    CHECK(generate_group(i23).order() == 6);

    auto i24 = build_i2(4, {rat("1/2"), rat("3/2")});
    CHECK(validate(i24).ok());
    CHECK(generate_group(i24).order() == 8);

    auto i26 = build_i2(6, {rat("1"), rat("2")});
    CHECK(validate(i26).ok());
    CHECK(generate_group(i26).order() == 12);
}

TEST_CASE("I2(2) carries the same root directions as Z2^2") {
    auto i22 = build_i2(2, {rat("1"), rat("1")});
    CHECK(validate(i22).ok());
    CHECK(i22.roots.size() == 4);
    CHECK(generate_group(i22).order() == 4);
}

TEST_CASE("reflection count matches the positive subsystem size") {
    for (int m : {2, 3, 4, 6}) {
        std::vector<Rational> kap(m % 2 == 0 ? 2 : 1, rat("1"));
        auto spec = build_i2(m, kap);
        auto grp = generate_group(spec);
        std::size_t reflections = 0;
        for (const auto& g : grp.elements) {
            // A 2x2 orthogonal reflection has trace 0 and determinant -1.
            ExactReal det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
            ExactReal tr = g[0][0] + g[1][1];
            if (det == ExactReal(-1) && tr.is_zero()) ++reflections;
        }
        CHECK(reflections == spec.positive.size());
    }
}

TEST_CASE("group elements map the root set to itself") {
    auto spec = build_i2(4, {rat("1"), rat("1")});
    auto grp = generate_group(spec);
    auto contains = [&](const EVec& x) {
        for (const auto& r : spec.roots)
            if (r == x) return true;
        return false;
    };
    for (const auto& g : grp.elements)
        for (const auto& r : spec.roots) CHECK(contains(emat_apply(g, r)));
}

TEST_CASE("validation reports missing negatives") {
    RootSystemSpec spec;
    spec.dim = 2;
    spec.roots = {{ExactReal(1), ExactReal(0)}};
    spec.roots_d = {{1.0, 0.0}};
    spec.kappa = {rat("1")};
    spec.positive = {0};
    auto rep = validate(spec);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("validation reports closure failures under reflections") {
    auto spec = build_custom(2, {{rat("1"), rat("0")}, {rat("1"), rat("1")}},
                             {rat("1"), rat("1")});
    auto rep = validate(spec);
    CHECK_FALSE(rep.ok());  // sigma_{(1,1)} e1 = (0,-1) is not a root
}

TEST_CASE("unequal kappa on the two Z2^2 axes is a valid multiplicity") {
    auto spec = build_z2(2, {rat("1/3"), rat("2")});
    CHECK(validate(spec).ok());  // the axes are not conjugate under Z2^2
}

TEST_CASE("negative multiplicities are rejected") {
    CHECK_THROWS_AS(build_z2(2, {rat("-1/2"), rat("1")}), std::invalid_argument);
}

TEST_CASE("i2 with m outside {2,3,4,6} validates in floating point") {
    auto spec = build_i2(5, {rat("1")});
    CHECK_FALSE(spec.exact);
    CHECK(validate(spec).ok());
    CHECK(generate_group(spec).order() == 10);
}

TEST_CASE("flip_positive keeps the spec valid") {
    auto spec = build_z2(3, {rat("1"), rat("1"), rat("1")});
    auto flipped = flip_positive(spec);
    CHECK(validate(flipped).ok());
    CHECK(flipped.positive.size() == spec.positive.size());
    CHECK(flipped.kappa_sum_positive() == spec.kappa_sum_positive());
}
