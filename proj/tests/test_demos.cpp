#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/demos.hpp"

using namespace exalg;

namespace {

bool is_coordinate_axis(const std::vector<Rational>& v) {
    int nz = 0;
    for (const auto& x : v)
        if (!x.is_zero()) ++nz;
    return nz == 1;
}

}  // namespace

TEST_CASE("torus fixed lines for p = 2, 3, 5") {
    auto two = torus_fixed_lines({Rational(1), Rational(-1)});
    CHECK(two.size() == 2);
    auto three = torus_fixed_lines({Rational(1), Rational(2), Rational(4)});
    CHECK(three.size() == 3);
    for (const auto& v : three) CHECK(is_coordinate_axis(v));
    auto five =
        torus_fixed_lines({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)});
    CHECK(five.size() == 5);
    for (const auto& v : five) CHECK(is_coordinate_axis(v));
}

TEST_CASE("repeated diagonal entries are rejected") {
    CHECK_THROWS_AS(torus_fixed_lines({Rational(1), Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("split form q = xy") {
    auto f = BinaryQuadraticForm::from_coefficients(Rational(0), Rational(1), Rational(0));
    auto iso = isotropic_lines(f);
    REQUIRE(iso.lines.size() == 2);
    CHECK(iso.lines[0] == std::array<Rational, 2>{Rational(1), Rational(0)});
    CHECK(iso.lines[1] == std::array<Rational, 2>{Rational(0), Rational(1)});
    CHECK(f.polar(iso.hyperbolic_basis[0], iso.hyperbolic_basis[1]) == Rational(1));
    CHECK(hyperbolic_basis_uniqueness_check(f));
}

TEST_CASE("q = x^2 - y^2 factors through (1,1) and (1,-1)") {
    auto f = BinaryQuadraticForm::from_coefficients(Rational(1), Rational(0), Rational(-1));
    auto iso = isotropic_lines(f);
    REQUIRE(iso.lines.size() == 2);
    for (const auto& line : iso.lines) {
        CHECK(f.q(line) == Rational(0));
        CHECK((line == std::array<Rational, 2>{Rational(1), Rational(1)} ||
               line == std::array<Rational, 2>{Rational(1), Rational(-1)}));
    }
    CHECK(hyperbolic_basis_uniqueness_check(f));
}

TEST_CASE("q = 2xy rescales its hyperbolic basis") {
    auto f = BinaryQuadraticForm::from_coefficients(Rational(0), Rational(2), Rational(0));
    auto iso = isotropic_lines(f);
    REQUIRE(iso.lines.size() == 2);
    CHECK(f.polar(iso.hyperbolic_basis[0], iso.hyperbolic_basis[1]) == Rational(1));
    CHECK(hyperbolic_basis_uniqueness_check(f));
}

TEST_CASE("x^2 + y^2 is anisotropic over the rationals") {
    auto f = BinaryQuadraticForm::from_coefficients(Rational(1), Rational(0), Rational(1));
    CHECK(isotropic_lines(f).lines.empty());
}

TEST_CASE("degenerate forms are rejected") {
    auto f = BinaryQuadraticForm::from_coefficients(Rational(1), Rational(2), Rational(1));
    CHECK(f.det().is_zero());
    CHECK_THROWS_AS(isotropic_lines(f), std::invalid_argument);
}

TEST_CASE("50 random isotropic forms: two lines and a unique hyperbolic basis") {
    for (int i = 0; i < 50; ++i) {
        auto f = random_isotropic_form(2024, i);
        REQUIRE(f.nondegenerate());
        auto iso = isotropic_lines(f);
        REQUIRE(iso.lines.size() == 2);
        CHECK(f.q(iso.lines[0]).is_zero());
        CHECK(f.q(iso.lines[1]).is_zero());
        CHECK(hyperbolic_basis_uniqueness_check(f));
    }
}

TEST_CASE("random form generator is deterministic") {
    auto a = random_isotropic_form(7, 3), b = random_isotropic_form(7, 3);
    CHECK(a.gram == b.gram);
}
