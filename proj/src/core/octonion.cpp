#include "core/octonion.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>

namespace exalg {

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 add(const Vec3& x, const Vec3& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

Vec3 sub(const Vec3& x, const Vec3& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

Vec3 scale(const Rational& s, const Vec3& x) {
    return {s * x[0], s * x[1], s * x[2]};
}

Rational dot(const Vec3& x, const Vec3& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Vec3 cross(const Vec3& x, const Vec3& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Octonion mul_with_signs(const Octonion& x, const Octonion& y, const ZornSigns& s) {
    Octonion out;
    out.a = x.a * y.a + dot(x.v, y.w);
    Vec3 vpart = add(scale(x.a, y.v), scale(y.b, x.v));
    Vec3 wcross = cross(x.w, y.w);
    out.v = s.cross_v > 0 ? add(vpart, wcross) : sub(vpart, wcross);
    Vec3 wpart = add(scale(y.a, x.w), scale(x.b, y.w));
    Vec3 vcross = cross(x.v, y.v);
    out.w = s.cross_w > 0 ? add(wpart, vcross) : sub(wpart, vcross);
    out.b = x.b * y.b + dot(x.w, y.v);
    return out;
}

bool composition_holds(const ZornSigns& s) {
    // Full polarization of n(xy) = n(x) n(y): for all basis pairs,
    //   n(e_i e_j, e_i' e_j') + n(e_i e_j', e_i' e_j) = n(e_i, e_i') n(e_j, e_j').
    std::array<Octonion, 8> e;
    for (std::size_t k = 0; k < 8; ++k) e[k] = Octonion::basis(k);
    std::array<std::array<Octonion, 8>, 8> prod;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) prod[i][j] = mul_with_signs(e[i], e[j], s);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t i2 = i; i2 < 8; ++i2)
            for (std::size_t j = 0; j < 8; ++j)
                for (std::size_t j2 = j; j2 < 8; ++j2) {
                    Rational lhs = oct_norm_polar(prod[i][j], prod[i2][j2]) +
                                   oct_norm_polar(prod[i][j2], prod[i2][j]);
                    Rational rhs = oct_norm_polar(e[i], e[i2]) * oct_norm_polar(e[j], e[j2]);
                    if (lhs != rhs) return false;
                }
    return true;
}

}  // namespace

const ZornSigns& zorn_signs() {
    static const ZornSigns calibrated = [] {
        const ZornSigns candidates[] = {{-1, +1}, {+1, -1}, {+1, +1}, {-1, -1}};
        for (const auto& s : candidates)
            if (composition_holds(s)) return s;
        throw std::logic_error("zorn_signs: no sign convention satisfies composition");
    }();
    return calibrated;
}

Octonion Octonion::unit() {
    Octonion e;
    e.a = Rational(1);
    e.b = Rational(1);
    return e;
}

Octonion Octonion::basis(std::size_t k) {
    Octonion e;
    if (k == 0)
        e.a = Rational(1);
    else if (k <= 3)
        e.v[k - 1] = Rational(1);
    else if (k <= 6)
        e.w[k - 4] = Rational(1);
    else if (k == 7)
        e.b = Rational(1);
    else
        throw std::out_of_range("Octonion::basis");
    return e;
}

Octonion Octonion::from_coords(const std::vector<Rational>& c) {
    if (c.size() != 8) throw std::invalid_argument("Octonion::from_coords: need 8 coordinates");
    Octonion x;
    x.a = c[0];
    x.v = {c[1], c[2], c[3]};
    x.w = {c[4], c[5], c[6]};
    x.b = c[7];
    return x;
}

Rational Octonion::coord(std::size_t k) const {
    if (k == 0) return a;
    if (k <= 3) return v[k - 1];
    if (k <= 6) return w[k - 4];
    if (k == 7) return b;
    throw std::out_of_range("Octonion::coord");
}

std::vector<Rational> Octonion::coords() const {
    return {a, v[0], v[1], v[2], w[0], w[1], w[2], b};
}

bool Octonion::is_zero() const {
    for (std::size_t k = 0; k < 8; ++k)
        if (!coord(k).is_zero()) return false;
    return true;
}

Octonion Octonion::operator+(const Octonion& y) const {
    Octonion out;
    out.a = a + y.a;
    out.v = add(v, y.v);
    out.w = add(w, y.w);
    out.b = b + y.b;
    return out;
}

Octonion Octonion::operator-(const Octonion& y) const {
    Octonion out;
    out.a = a - y.a;
    out.v = sub(v, y.v);
    out.w = sub(w, y.w);
    out.b = b - y.b;
    return out;
}

Octonion Octonion::scaled(const Rational& s) const {
    Octonion out;
    out.a = s * a;
    out.v = scale(s, v);
    out.w = scale(s, w);
    out.b = s * b;
    return out;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
    return mul_with_signs(x, y, zorn_signs());
}

Octonion oct_conj(const Octonion& x) {
    Octonion out;
    out.a = x.b;
    out.v = {-x.v[0], -x.v[1], -x.v[2]};
    out.w = {-x.w[0], -x.w[1], -x.w[2]};
    out.b = x.a;
    return out;
}

Rational oct_norm(const Octonion& x) {
    return x.a * x.b - dot(x.v, x.w);
}

Rational oct_trace(const Octonion& x) {
    return x.a + x.b;
}

Rational oct_norm_polar(const Octonion& x, const Octonion& y) {
    return x.a * y.b + y.a * x.b - dot(x.v, y.w) - dot(y.v, x.w);
}

std::optional<Rational> oct_is_similitude(const ExactMatrix& m) {
    if (m.rows() != 8 || m.cols() != 8)
        throw std::invalid_argument("oct_is_similitude: map must be 8x8");
    std::array<Octonion, 8> img;
    for (std::size_t k = 0; k < 8; ++k) {
        std::vector<Rational> col(8);
        for (std::size_t i = 0; i < 8; ++i) col[i] = m.at(i, k);
        img[k] = Octonion::from_coords(col);
    }
    // n(e_0, e_7) = 1, so the multiplier is pinned by that pair.
    Rational mu = oct_norm_polar(img[0], img[7]);
    if (mu.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i; j < 8; ++j) {
            Rational expected = mu * oct_norm_polar(Octonion::basis(i), Octonion::basis(j));
            if (oct_norm_polar(img[i], img[j]) != expected) return std::nullopt;
        }
    return mu;
}

namespace {

ExactMatrix matrix_of(const std::function<Octonion(const Octonion&)>& f) {
    ExactMatrix m(8, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        Octonion img = f(Octonion::basis(k));
        for (std::size_t i = 0; i < 8; ++i) m.set(i, k, img.coord(i));
    }
    return m;
}

}  // namespace

ExactMatrix left_mult_matrix(const Octonion& u) {
    return matrix_of([&u](const Octonion& x) { return oct_mul(u, x); });
}

ExactMatrix right_mult_matrix(const Octonion& u) {
    return matrix_of([&u](const Octonion& x) { return oct_mul(x, u); });
}

ExactMatrix bimult_matrix(const Octonion& u) {
    return matrix_of([&u](const Octonion& x) { return oct_mul(oct_mul(u, x), u); });
}

ExactMatrix conj_twist(const ExactMatrix& m) {
    ExactMatrix out(8, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        Octonion pre = oct_conj(Octonion::basis(k));
        Octonion img = oct_conj(Octonion::from_coords(m.apply(pre.coords())));
        for (std::size_t i = 0; i < 8; ++i) out.set(i, k, img.coord(i));
    }
    return out;
}

std::string oct_table_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Octonion p = oct_mul(Octonion::basis(i), Octonion::basis(j));
            for (std::size_t k = 0; k < 8; ++k)
                if (!p.coord(k).is_zero())
                    arr.push_back({i, j, k, p.coord(k).to_pair_string()});
        }
    nlohmann::ordered_json j;
    j["structure"] = "octonion-table";
    j["dims"] = {8, 8, 8};
    j["entries"] = std::move(arr);
    return j.dump();
}

std::string oct_to_json(const Octonion& x) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < 8; ++k) arr.push_back(x.coord(k).to_pair_string());
    return arr.dump();
}

Octonion oct_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Rational> c;
    for (const auto& s : j) c.push_back(Rational::parse(s.get<std::string>()));
    return Octonion::from_coords(c);
}

}  // namespace exalg
