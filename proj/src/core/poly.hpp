#ifndef EXALG_POLY_HPP
#define EXALG_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "core/rational.hpp"

namespace exalg {

/// Monomial in up to 56 variables, degree <= 4: sorted variable indices,
/// padded with 0xFF.
struct Monomial {
    std::array<std::uint8_t, 4> v{0xFF, 0xFF, 0xFF, 0xFF};

    static Monomial one() { return {}; }
    static Monomial var(std::uint8_t i) {
        Monomial m;
        m.v[0] = i;
        return m;
    }

    int degree() const {
        int d = 0;
        while (d < 4 && v[d] != 0xFF) ++d;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        if (degree() + o.degree() > 4) throw std::domain_error("Monomial: degree overflow");
        Monomial out;
        std::size_t i = 0, j = 0, k = 0;
        while (i < 4 && v[i] != 0xFF && j < 4 && o.v[j] != 0xFF)
            out.v[k++] = v[i] <= o.v[j] ? v[i++] : o.v[j++];
        while (i < 4 && v[i] != 0xFF) out.v[k++] = v[i++];
        while (j < 4 && o.v[j] != 0xFF) out.v[k++] = o.v[j++];
        return out;
    }

    /// Product of factorials of variable multiplicities (polarization factor).
    long multiplicity_factorial() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial with coefficients in T (Rational, or a small vector of
/// Rationals for coefficient families).
template <typename T>
using Poly = std::map<Monomial, T>;

template <typename T>
void poly_add(Poly<T>& dst, const Monomial& m, const T& coef) {
    auto [it, inserted] = dst.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == T{}) dst.erase(it);
    }
}

template <typename T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<Rational>& b) {
    Poly<T> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            T prod = ca;
            prod *= cb;
            poly_add(out, ma * mb, prod);
        }
    return out;
}

template <typename T>
Poly<T> poly_scale(const Poly<T>& a, const Rational& s) {
    Poly<T> out;
    for (const auto& [m, c] : a) {
        T v = c;
        v *= s;
        if (!(v == T{})) out.emplace(m, v);
    }
    return out;
}

/// d/dx_i, as a polynomial map (degree drops by one).
template <typename T>
Poly<T> poly_derivative(const Poly<T>& a, std::uint8_t var) {
    Poly<T> out;
    for (const auto& [m, c] : a) {
        int mult = 0;
        for (int k = 0; k < 4; ++k)
            if (m.v[k] == var) ++mult;
        if (!mult) continue;
        Monomial d;
        std::size_t k = 0;
        bool removed = false;
        for (int p = 0; p < 4; ++p) {
            if (m.v[p] == 0xFF) break;
            if (m.v[p] == var && !removed) {
                removed = true;
                continue;
            }
            d.v[k++] = m.v[p];
        }
        T v = c;
        v *= Rational(mult);
        poly_add(out, d, v);
    }
    return out;
}

template <typename T>
T poly_eval(const Poly<T>& a, const std::vector<Rational>& x) {
    T acc{};
    for (const auto& [m, c] : a) {
        Rational term(1);
        for (int k = 0; k < 4; ++k) {
            if (m.v[k] == 0xFF) break;
            term *= x[m.v[k]];
        }
        T v = c;
        v *= term;
        acc += v;
    }
    return acc;
}

/// Coefficient triple (c1, c2, c4) plus a constant part: values of the form
/// c1*a + c2*b + c4*c + d used while the quartic form is being calibrated.
struct CVec {
    std::array<Rational, 4> a{};

    CVec() = default;
    static CVec c1() { return unit(0); }
    static CVec c2() { return unit(1); }
    static CVec c4() { return unit(2); }
    static CVec constant(const Rational& r) {
        CVec v;
        v.a[3] = r;
        return v;
    }

    CVec& operator+=(const CVec& o) {
        for (int i = 0; i < 4; ++i) a[i] += o.a[i];
        return *this;
    }
    CVec& operator*=(const Rational& s) {
        for (int i = 0; i < 4; ++i) a[i] *= s;
        return *this;
    }
    friend bool operator==(const CVec&, const CVec&) = default;

    /// Instantiate at concrete coefficients.
    Rational at(const Rational& c1v, const Rational& c2v, const Rational& c4v) const {
        return a[0] * c1v + a[1] * c2v + a[2] * c4v + a[3];
    }

  private:
    static CVec unit(int i) {
        CVec v;
        v.a[i] = Rational(1);
        return v;
    }
};

}  // namespace exalg

#endif
