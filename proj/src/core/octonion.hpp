#ifndef EXALG_OCTONION_HPP
#define EXALG_OCTONION_HPP

#include <array>
#include <optional>
#include <string>

#include "core/matrix.hpp"
#include "core/rational.hpp"

namespace exalg {

/// Split octonion in Zorn vector-matrix form [[a, v], [w, b]].
/// Coordinate order for 8-vectors: a, v1, v2, v3, w1, w2, w3, b.
struct Octonion {
    Rational a;
    std::array<Rational, 3> v{};
    std::array<Rational, 3> w{};
    Rational b;

    static Octonion unit();
    static Octonion basis(std::size_t k);
    static Octonion from_coords(const std::vector<Rational>& c);

    Rational coord(std::size_t k) const;
    std::vector<Rational> coords() const;

    bool is_zero() const;
    friend bool operator==(const Octonion& x, const Octonion& y) = default;

    Octonion operator+(const Octonion& y) const;
    Octonion operator-(const Octonion& y) const;
    Octonion scaled(const Rational& s) const;
};

/// Multiplication signs of the two cross-product terms in the Zorn product,
/// fixed once by the composition-law calibration.
struct ZornSigns {
    int cross_v;  // sign of w x w' in the v-part
    int cross_w;  // sign of v x v' in the w-part
};

/// The calibrated sign convention: the first of the four candidate
/// conventions under which the norm is multiplicative (verified symbolically
/// on all polarized basis quadruples).
const ZornSigns& zorn_signs();

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
Rational oct_norm(const Octonion& x);
Rational oct_trace(const Octonion& x);
/// Polar form n(x+y) - n(x) - n(y) of the norm.
Rational oct_norm_polar(const Octonion& x, const Octonion& y);

/// Multiplier of the map when it is a similitude of the norm, i.e.
/// n(m(x)) = mu * n(x) identically with mu != 0; nullopt otherwise.
std::optional<Rational> oct_is_similitude(const ExactMatrix& m);

struct OctonionSimilitude {
    ExactMatrix map;
    Rational multiplier;
};

/// 8x8 matrices of x -> u*x, x -> x*u and z -> (u*z)*u.
ExactMatrix left_mult_matrix(const Octonion& u);
ExactMatrix right_mult_matrix(const Octonion& u);
ExactMatrix bimult_matrix(const Octonion& u);
/// Conjugated variant x -> conj(m(conj(x))).
ExactMatrix conj_twist(const ExactMatrix& m);

/// Multiplication table as sparse triples (i, j, k, value): e_i * e_j has
/// coefficient value at e_k. Sorted; bit-stable.
std::string oct_table_json();

std::string oct_to_json(const Octonion& x);
Octonion oct_from_json(const std::string& text);

}  // namespace exalg

#endif
