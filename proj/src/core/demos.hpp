#ifndef EXALG_DEMOS_HPP
#define EXALG_DEMOS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "core/matrix.hpp"

namespace exalg {

/// Lines in p-space fixed by a regular diagonal torus element: exactly the
/// p coordinate axes, found by exact eigenspace computation. Rejects
/// repeated diagonal entries.
std::vector<std::vector<Rational>> torus_fixed_lines(const std::vector<Rational>& diagonal);

/// Binary quadratic form via its polarization Gram matrix:
/// q(v) = v^T G v / 2, b_q(u, v) = u^T G v.
struct BinaryQuadraticForm {
    std::array<std::array<Rational, 2>, 2> gram;

    static BinaryQuadraticForm from_coefficients(const Rational& a, const Rational& b,
                                                 const Rational& c);  // a x^2 + b xy + c y^2

    Rational q(const std::array<Rational, 2>& v) const;
    Rational polar(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v) const;
    Rational det() const;
    bool nondegenerate() const { return !det().is_zero(); }
};

struct IsotropicLines {
    /// 0 or 2 projective lines (never 1, by nondegeneracy).
    std::vector<std::array<Rational, 2>> lines;
    /// When two lines exist: representatives (v1, v2) scaled so that
    /// b_q(v1, v2) = 1.
    std::array<std::array<Rational, 2>, 2> hyperbolic_basis;
};

/// Solves q = 0 projectively over the rationals. Throws on degenerate forms.
IsotropicLines isotropic_lines(const BinaryQuadraticForm& form);

/// Certifies that every hyperbolic pair (u1, u2) with q(u_i) = 0 and
/// b_q(u1,u2) = 1 is (lambda v1, lambda^{-1} v2) or the swap: checks that
/// q(s v1 + t v2) = s t exactly (three evaluations determine the quadratic),
/// which makes the two computed lines the only isotropic ones.
bool hyperbolic_basis_uniqueness_check(const BinaryQuadraticForm& form);

/// Seeded generator of nondegenerate isotropic forms: pullbacks of xy under
/// random invertible integer changes of basis.
BinaryQuadraticForm random_isotropic_form(std::uint64_t seed, int index);

}  // namespace exalg

#endif
