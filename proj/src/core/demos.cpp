#include "core/demos.hpp"

#include <random>
#include <stdexcept>

#include "core/kernel.hpp"

namespace exalg {

std::vector<std::vector<Rational>> torus_fixed_lines(const std::vector<Rational>& diagonal) {
    std::size_t p = diagonal.size();
    if (p < 2) throw std::invalid_argument("torus_fixed_lines: need at least 2 entries");
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            if (diagonal[i] == diagonal[j])
                throw std::invalid_argument("torus_fixed_lines: repeated diagonal entries");

    std::vector<std::vector<Rational>> lines;
    std::size_t total = 0;
    for (std::size_t i = 0; i < p; ++i) {
        ExactMatrix m(p, p);
        for (std::size_t k = 0; k < p; ++k) m.set(k, k, diagonal[k] - diagonal[i]);
        auto kb = kernel(m);
        total += kb.dimension();
        for (const auto& v : kb.vectors) lines.push_back(v);
    }
    if (total != p) throw std::logic_error("torus_fixed_lines: eigenspaces do not fill the space");
    return lines;
}

BinaryQuadraticForm BinaryQuadraticForm::from_coefficients(const Rational& a, const Rational& b,
                                                           const Rational& c) {
    BinaryQuadraticForm f;
    f.gram[0][0] = Rational(2) * a;
    f.gram[0][1] = b;
    f.gram[1][0] = b;
    f.gram[1][1] = Rational(2) * c;
    return f;
}

Rational BinaryQuadraticForm::q(const std::array<Rational, 2>& v) const {
    return polar(v, v) / Rational(2);
}

Rational BinaryQuadraticForm::polar(const std::array<Rational, 2>& u,
                                    const std::array<Rational, 2>& v) const {
    Rational acc;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) acc += u[i] * gram[i][j] * v[j];
    return acc;
}

Rational BinaryQuadraticForm::det() const {
    return gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
}

namespace {

/// Exact square root of a rational when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    Int num = r.num(), den = r.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

std::array<Rational, 2> normalize_line(std::array<Rational, 2> v) {
    Int den(1);
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
    Int n0 = v[0].num() * (den / v[0].den());
    Int n1 = v[1].num() * (den / v[1].den());
    Int g;
    mpz_gcd(g.get_mpz_t(), n0.get_mpz_t(), n1.get_mpz_t());
    if (sgn(g) == 0) throw std::logic_error("normalize_line: zero vector");
    n0 /= g;
    n1 /= g;
    if (sgn(n0) < 0 || (sgn(n0) == 0 && sgn(n1) < 0)) {
        n0 = -n0;
        n1 = -n1;
    }
    return {Rational(n0), Rational(n1)};
}

}  // namespace

IsotropicLines isotropic_lines(const BinaryQuadraticForm& form) {
    if (!form.nondegenerate())
        throw std::invalid_argument("isotropic_lines: degenerate form rejected");
    // q(x, y) = (g00 x^2 + 2 g01 x y + g11 y^2) / 2
    const Rational& g00 = form.gram[0][0];
    const Rational& g01 = form.gram[0][1];
    const Rational& g11 = form.gram[1][1];

    IsotropicLines out;
    std::vector<std::array<Rational, 2>> raw;
    if (g00.is_zero()) {
        // q = y (2 g01 x + g11 y) / 2
        raw.push_back({Rational(1), Rational(0)});
        raw.push_back(normalize_line({g11, Rational(-2) * g01}));
    } else {
        // roots of g00 t^2 + 2 g01 t + g11 for t = x/y; disc/4 = g01^2 - g00 g11
        Rational quarter_disc = g01 * g01 - g00 * g11;
        auto root = exact_sqrt(quarter_disc);
        if (!root) return out;  // anisotropic over Q
        if (root->is_zero()) throw std::logic_error("isotropic_lines: degenerate discriminant");
        raw.push_back(normalize_line({(-g01 + *root) / g00, Rational(1)}));
        raw.push_back(normalize_line({(-g01 - *root) / g00, Rational(1)}));
    }
    out.lines = raw;
    // scale v2 so that b_q(v1, v2) = 1
    Rational pairing = form.polar(raw[0], raw[1]);
    if (pairing.is_zero()) throw std::logic_error("isotropic_lines: isotropic pair degenerate");
    out.hyperbolic_basis[0] = raw[0];
    out.hyperbolic_basis[1] = {raw[1][0] / pairing, raw[1][1] / pairing};
    return out;
}

bool hyperbolic_basis_uniqueness_check(const BinaryQuadraticForm& form) {
    auto iso = isotropic_lines(form);
    if (iso.lines.size() != 2) return false;
    const auto& v1 = iso.hyperbolic_basis[0];
    const auto& v2 = iso.hyperbolic_basis[1];
    // In the (v1, v2) coordinates the form is q(s v1 + t v2) = a s^2 + d s t
    // + c t^2 with a = q(v1), c = q(v2), d = b_q(v1,v2); the three values
    // below pin it to exactly s t, whose only projective zeros are the two
    // coordinate lines. Any hyperbolic pair therefore lives on those lines,
    // and b_q(u1, u2) = 1 forces (lambda v1, lambda^{-1} v2) up to swap.
    if (!form.q(v1).is_zero()) return false;
    if (!form.q(v2).is_zero()) return false;
    if (form.polar(v1, v2) != Rational(1)) return false;
    std::array<Rational, 2> sum{v1[0] + v2[0], v1[1] + v2[1]};
    return form.q(sum) == Rational(1);
}

BinaryQuadraticForm random_isotropic_form(std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(index));
    std::uniform_int_distribution<long> d(-9, 9);
    for (;;) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a * e - b * c == 0) continue;
        // pullback of q = xy (gram [[0,1],[1,0]]) under P = [[a,b],[c,e]]
        BinaryQuadraticForm f;
        f.gram[0][0] = Rational(2 * a * c);
        f.gram[0][1] = Rational(a * e + b * c);
        f.gram[1][0] = f.gram[0][1];
        f.gram[1][1] = Rational(2 * b * e);
        return f;
    }
}

}  // namespace exalg
