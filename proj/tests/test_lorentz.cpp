#include <cmath>

#include <doctest.h>

#include "mink/errors.hpp"
#include "mink/lorentz.hpp"

using namespace mink;

TEST_CASE("scalar product and norm") {
    const LVec3 a{2.0, 1.0, 1.0};
    CHECK(minkowski_inner(a, a) == doctest::Approx(-2.0));
    CHECK(causal_character(a) == CausalCharacter::Timelike);

    const LVec3 b{0.0, 3.0, 4.0};
    CHECK(minkowski_inner(b, b) == doctest::Approx(25.0));
    CHECK(lorentz_norm(b) == doctest::Approx(5.0));
    CHECK(causal_character(b) == CausalCharacter::Spacelike);

    const LVec3 c{1.0, 1.0, 0.0};
    CHECK(causal_character(c) == CausalCharacter::Lightlike);

    const LVec3 zero{};
    CHECK(causal_character(zero) == CausalCharacter::Spacelike);

    CHECK(euclidean_norm(b) == doctest::Approx(5.0));
    CHECK(euclidean_norm(a) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("cross product pinned values") {
    const LVec3 e1{1.0, 0.0, 0.0};
    const LVec3 e2{0.0, 1.0, 0.0};
    const LVec3 e3{0.0, 0.0, 1.0};

    const LVec3 c23 = lorentz_cross(e2, e3);
    CHECK(c23.x1 == doctest::Approx(1.0));
    CHECK(c23.x2 == doctest::Approx(0.0));
    CHECK(c23.x3 == doctest::Approx(0.0));

    const LVec3 c12 = lorentz_cross(e1, e2);
    CHECK(c12.x1 == doctest::Approx(0.0));
    CHECK(c12.x2 == doctest::Approx(0.0));
    CHECK(c12.x3 == doctest::Approx(-1.0));
}

TEST_CASE("cross product identities") {
    const LVec3 pool[4] = {{0.3, -1.2, 0.7},
                           {2.0, 0.4, -0.5},
                           {-1.1, 0.9, 2.2},
                           {0.0, 1.5, -2.0}};
    for (const LVec3& a : pool) {
        for (const LVec3& b : pool) {
            const LVec3 c = lorentz_cross(a, b);
            // Orthogonal to both factors.
            CHECK(minkowski_inner(c, a) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(minkowski_inner(c, b) == doctest::Approx(0.0).epsilon(1e-12));
            // Lagrange identity for the index-one metric.
            const double lhs = minkowski_inner(c, c);
            const double rhs = minkowski_inner(a, b) * minkowski_inner(a, b) -
                               minkowski_inner(a, a) * minkowski_inner(b, b);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("angle between spacelike vectors spanning a timelike plane") {
    const LVec3 x{1.0, 2.0, 0.0};
    const LVec3 y{-1.0, 2.0, 0.0};
    const LorentzAngle a = lorentz_angle(x, y);
    CHECK(a.kind == AngleKind::TimelikePlane);
    CHECK(a.value == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(a.value == doctest::Approx(1.0986122886681098).epsilon(1e-14));
}

TEST_CASE("angle between spacelike vectors spanning a spacelike plane") {
    const LVec3 x{0.0, 1.0, 0.0};
    const LVec3 y{0.0, 1.0, 1.0};
    const LorentzAngle a = lorentz_angle(x, y);
    CHECK(a.kind == AngleKind::SpacelikePlane);
    CHECK(a.value == doctest::Approx(std::acos(1.0 / std::sqrt(2.0))));
}

TEST_CASE("angle between a spacelike and a timelike vector") {
    const LVec3 x{0.0, 3.0, 4.0};
    const LVec3 y{2.0, 1.0, 0.0};
    const LorentzAngle a = lorentz_angle(x, y);
    CHECK(a.kind == AngleKind::SpacelikeTimelike);
    CHECK(std::sinh(a.value) ==
          doctest::Approx(3.0 / (5.0 * std::sqrt(3.0))).epsilon(1e-14));
    // Swapping arguments or flipping time orientation must not matter.
    const LorentzAngle b = lorentz_angle(y, x);
    CHECK(b.value == doctest::Approx(a.value));
    const LVec3 yneg{-2.0, 1.0, 0.0};
    const LorentzAngle c = lorentz_angle(x, yneg);
    CHECK(c.value == doctest::Approx(a.value));
}

TEST_CASE("angle between timelike vectors") {
    const LVec3 x{2.0, 1.0, 0.0};
    const LVec3 y{3.0, 0.0, 1.0};
    const LorentzAngle a = lorentz_angle(x, y);
    CHECK(a.kind == AngleKind::TimelikeTimelike);
    CHECK(std::cosh(a.value) ==
          doctest::Approx(6.0 / std::sqrt(24.0)).epsilon(1e-14));

    const LVec3 ybackward{-3.0, 0.0, 1.0};
    CHECK_THROWS_AS((void)lorentz_angle(x, ybackward), DomainError);
}

TEST_CASE("angle domain errors") {
    const LVec3 xs{0.0, 1.0, 0.0};
    const LVec3 ydeg{1.0, 0.5, 1.0}; // Gram determinant exactly zero
    CHECK_THROWS_AS((void)lorentz_angle(xs, ydeg), DomainError);

    const LVec3 light{1.0, 1.0, 0.0};
    CHECK_THROWS_AS((void)lorentz_angle(xs, light), DomainError);

    const LVec3 zero{};
    CHECK_THROWS_AS((void)lorentz_angle(zero, xs), DomainError);
}
