#include "core/albert.hpp"

#include <json.hpp>

#include <stdexcept>

namespace exalg {

namespace {

constexpr std::size_t kDim = 27;

using OctMatrix = std::array<std::array<Octonion, 3>, 3>;

OctMatrix to_matrix(const AlbertElement& x) {
    OctMatrix m;
    Octonion e = Octonion::unit();
    m[0][0] = e.scaled(x.d[0]);
    m[1][1] = e.scaled(x.d[1]);
    m[2][2] = e.scaled(x.d[2]);
    m[0][1] = x.o[2];
    m[1][0] = oct_conj(x.o[2]);
    m[1][2] = x.o[0];
    m[2][1] = oct_conj(x.o[0]);
    m[2][0] = x.o[1];
    m[0][2] = oct_conj(x.o[1]);
    return m;
}

AlbertElement from_matrix(const OctMatrix& m) {
    AlbertElement x;
    for (std::size_t i = 0; i < 3; ++i) {
        const Octonion& diag = m[i][i];
        if (diag.a != diag.b || !Octonion{Rational(0), diag.v, diag.w, Rational(0)}.is_zero())
            throw std::logic_error("Albert product left a non-scalar diagonal entry");
        x.d[i] = diag.a;
    }
    x.o[0] = m[1][2];
    x.o[1] = m[2][0];
    x.o[2] = m[0][1];
    if (!(m[2][1] == oct_conj(x.o[0])) || !(m[0][2] == oct_conj(x.o[1])) ||
        !(m[1][0] == oct_conj(x.o[2])))
        throw std::logic_error("Albert product left a non-hermitian matrix");
    return x;
}

}  // namespace

AlbertElement AlbertElement::unit() {
    return diag(Rational(1), Rational(1), Rational(1));
}

AlbertElement AlbertElement::diag(const Rational& a0, const Rational& a1, const Rational& a2) {
    AlbertElement x;
    x.d = {a0, a1, a2};
    return x;
}

AlbertElement AlbertElement::diag_idempotent(std::size_t i) {
    if (i >= 3) throw std::out_of_range("diag_idempotent");
    AlbertElement x;
    x.d[i] = Rational(1);
    return x;
}

AlbertElement AlbertElement::basis(std::size_t k) {
    if (k >= kDim) throw std::out_of_range("AlbertElement::basis");
    AlbertElement x;
    if (k < 3)
        x.d[k] = Rational(1);
    else
        x.o[(k - 3) / 8] = Octonion::basis((k - 3) % 8);
    return x;
}

AlbertElement AlbertElement::from_coords(const std::vector<Rational>& c) {
    if (c.size() != kDim) throw std::invalid_argument("AlbertElement: need 27 coordinates");
    AlbertElement x;
    x.d = {c[0], c[1], c[2]};
    for (std::size_t s = 0; s < 3; ++s)
        x.o[s] = Octonion::from_coords(
            std::vector<Rational>(c.begin() + 3 + 8 * s, c.begin() + 3 + 8 * (s + 1)));
    return x;
}

Rational AlbertElement::coord(std::size_t k) const {
    if (k < 3) return d[k];
    if (k < kDim) return o[(k - 3) / 8].coord((k - 3) % 8);
    throw std::out_of_range("AlbertElement::coord");
}

std::vector<Rational> AlbertElement::coords() const {
    std::vector<Rational> c;
    c.reserve(kDim);
    for (std::size_t k = 0; k < kDim; ++k) c.push_back(coord(k));
    return c;
}

bool AlbertElement::is_zero() const {
    for (std::size_t k = 0; k < kDim; ++k)
        if (!coord(k).is_zero()) return false;
    return true;
}

AlbertElement AlbertElement::operator+(const AlbertElement& y) const {
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.d[i] = d[i] + y.d[i];
        out.o[i] = o[i] + y.o[i];
    }
    return out;
}

AlbertElement AlbertElement::operator-(const AlbertElement& y) const {
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.d[i] = d[i] - y.d[i];
        out.o[i] = o[i] - y.o[i];
    }
    return out;
}

AlbertElement AlbertElement::scaled(const Rational& s) const {
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.d[i] = s * d[i];
        out.o[i] = o[i].scaled(s);
    }
    return out;
}

AlbertElement jordan_mul(const AlbertElement& x, const AlbertElement& y) {
    OctMatrix a = to_matrix(x), b = to_matrix(y);
    OctMatrix s;
    Rational half(Int(1), Int(2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Octonion acc;
            for (std::size_t k = 0; k < 3; ++k)
                acc = acc + oct_mul(a[i][k], b[k][j]) + oct_mul(b[i][k], a[k][j]);
            s[i][j] = acc.scaled(half);
        }
    return from_matrix(s);
}

const JordanTensors& jordan_tensors() {
    static const JordanTensors tensors = [] {
        JordanTensors t;
        t.product.assign(kDim, std::vector<std::vector<std::pair<std::uint32_t, Rational>>>(kDim));
        std::vector<AlbertElement> e;
        for (std::size_t k = 0; k < kDim; ++k) e.push_back(AlbertElement::basis(k));
        for (std::size_t a = 0; a < kDim; ++a)
            for (std::size_t b = a; b < kDim; ++b) {
                AlbertElement p = jordan_mul(e[a], e[b]);
                for (std::size_t c = 0; c < kDim; ++c) {
                    Rational v = p.coord(c);
                    if (!v.is_zero()) {
                        t.product[a][b].emplace_back(c, v);
                        if (a != b) t.product[b][a].emplace_back(c, v);
                    }
                }
            }
        for (std::size_t a = 0; a < kDim; ++a)
            for (std::size_t b = a; b < kDim; ++b) {
                Rational tr;
                for (const auto& [c, v] : t.product[a][b])
                    if (c < 3) tr += v;
                if (!tr.is_zero()) {
                    t.gram.set(a, b, tr);
                    if (a != b) t.gram.set(b, a, tr);
                }
            }

        // Local helpers over the freshly built table: the public fast paths
        // would re-enter this initializer.
        auto mul_local = [&t](const AlbertElement& x, const AlbertElement& y) {
            std::vector<Rational> out(kDim);
            for (std::size_t a = 0; a < kDim; ++a) {
                Rational xa = x.coord(a);
                if (xa.is_zero()) continue;
                for (std::size_t b = 0; b < kDim; ++b) {
                    Rational yb = y.coord(b);
                    if (yb.is_zero()) continue;
                    Rational f = xa * yb;
                    for (const auto& [c, v] : t.product[a][b]) out[c] += f * v;
                }
            }
            return AlbertElement::from_coords(out);
        };
        auto norm_local = [&mul_local](const AlbertElement& x) {
            AlbertElement x2 = mul_local(x, x);
            AlbertElement x3 = mul_local(x, x2);
            Rational t1 = alb_trace(x), t2 = alb_trace(x2), t3v = alb_trace(x3);
            return (t1 * t1 * t1 - Rational(3) * t1 * t2 + Rational(2) * t3v) / Rational(6);
        };
        auto adjoint_local = [&mul_local](const AlbertElement& x) {
            AlbertElement x2 = mul_local(x, x);
            Rational t1 = alb_trace(x);
            Rational s = (t1 * t1 - alb_trace(x2)) / Rational(2);
            return x2 - x.scaled(t1) + AlbertElement::unit().scaled(s);
        };

        t.sharp_polar.assign(kDim,
                             std::vector<std::vector<std::pair<std::uint32_t, Rational>>>(kDim));
        for (std::size_t a = 0; a < kDim; ++a)
            for (std::size_t b = a; b < kDim; ++b) {
                AlbertElement cr =
                    adjoint_local(e[a] + e[b]) - adjoint_local(e[a]) - adjoint_local(e[b]);
                for (std::size_t c = 0; c < kDim; ++c) {
                    Rational v = cr.coord(c);
                    if (!v.is_zero()) {
                        t.sharp_polar[a][b].emplace_back(c, v);
                        if (a != b) t.sharp_polar[b][a].emplace_back(c, v);
                    }
                }
            }
        auto n3_local = [&norm_local](const AlbertElement& x, const AlbertElement& y,
                                      const AlbertElement& z) {
            return norm_local(x + y + z) - norm_local(x + y) - norm_local(x + z) -
                   norm_local(y + z) + norm_local(x) + norm_local(y) + norm_local(z);
        };
        t.t3_by_pair.assign(kDim * kDim, {});
        for (std::size_t a = 0; a < kDim; ++a)
            for (std::size_t b = a; b < kDim; ++b)
                for (std::size_t c = b; c < kDim; ++c) {
                    Rational v = n3_local(e[a], e[b], e[c]);
                    if (v.is_zero()) continue;
                    t.t3.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                    static_cast<std::uint32_t>(c), v});
                }
        for (const auto& entry : t.t3) {
            // expand to ordered (b, c) access: value at pair (q, r) lists slot p
            std::uint32_t idx[3] = {entry.a, entry.b, entry.c};
            std::array<std::array<std::uint32_t, 3>, 6> perms = {{{idx[0], idx[1], idx[2]},
                                                                  {idx[0], idx[2], idx[1]},
                                                                  {idx[1], idx[0], idx[2]},
                                                                  {idx[1], idx[2], idx[0]},
                                                                  {idx[2], idx[0], idx[1]},
                                                                  {idx[2], idx[1], idx[0]}}};
            std::vector<std::array<std::uint32_t, 3>> distinct;
            for (const auto& p : perms) {
                bool seen = false;
                for (const auto& q : distinct)
                    if (p == q) { seen = true; break; }
                if (!seen) distinct.push_back(p);
            }
            for (const auto& p : distinct)
                t.t3_by_pair[p[1] * kDim + p[2]].emplace_back(p[0], entry.val);
        }
        return t;
    }();
    return tensors;
}

AlbertElement jordan_mul_fast(const AlbertElement& x, const AlbertElement& y) {
    const auto& t = jordan_tensors();
    std::vector<Rational> out(kDim);
    for (std::size_t a = 0; a < kDim; ++a) {
        Rational xa = x.coord(a);
        if (xa.is_zero()) continue;
        for (std::size_t b = 0; b < kDim; ++b) {
            Rational yb = y.coord(b);
            if (yb.is_zero()) continue;
            Rational f = xa * yb;
            for (const auto& [c, v] : t.product[a][b]) out[c] += f * v;
        }
    }
    return AlbertElement::from_coords(out);
}

Rational alb_trace(const AlbertElement& x) {
    return x.d[0] + x.d[1] + x.d[2];
}

Rational trace_form(const AlbertElement& x, const AlbertElement& y) {
    return alb_trace(jordan_mul_fast(x, y));
}

Rational alb_norm(const AlbertElement& x) {
    AlbertElement x2 = jordan_mul_fast(x, x);
    AlbertElement x3 = jordan_mul_fast(x, x2);
    Rational t1 = alb_trace(x);
    Rational t2 = alb_trace(x2);
    Rational t3 = alb_trace(x3);
    return (t1 * t1 * t1 - Rational(3) * t1 * t2 + Rational(2) * t3) / Rational(6);
}

Rational norm_polarization(const AlbertElement& x, const AlbertElement& y,
                           const AlbertElement& z) {
    return alb_norm(x + y + z) - alb_norm(x + y) - alb_norm(x + z) - alb_norm(y + z) +
           alb_norm(x) + alb_norm(y) + alb_norm(z);
}

AlbertElement adjoint(const AlbertElement& x) {
    AlbertElement x2 = jordan_mul_fast(x, x);
    Rational t1 = alb_trace(x);
    Rational s = (t1 * t1 - alb_trace(x2)) / Rational(2);
    return x2 - x.scaled(t1) + AlbertElement::unit().scaled(s);
}

AlbertElement cross(const AlbertElement& x, const AlbertElement& y) {
    return adjoint(x + y) - adjoint(x) - adjoint(y);
}

bool is_rank_one(const AlbertElement& x) {
    if (x.is_zero()) return false;
    return cross(x, x).is_zero();
}

std::vector<AlbertElement> springer_complement() {
    const auto& t = jordan_tensors();
    ExactMatrix system(3, kDim);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < kDim; ++c) system.set(i, c, t.gram.at(i, c));
    auto kb = kernel(system);
    std::vector<AlbertElement> basis;
    for (const auto& v : kb.vectors) basis.push_back(AlbertElement::from_coords(v));
    return basis;
}

std::string albert_to_json(const AlbertElement& x) {
    nlohmann::ordered_json j;
    auto d = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) d.push_back(x.d[i].to_pair_string());
    auto o = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        auto arr = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < 8; ++k) arr.push_back(x.o[i].coord(k).to_pair_string());
        o.push_back(std::move(arr));
    }
    j["d"] = std::move(d);
    j["o"] = std::move(o);
    return j.dump();
}

AlbertElement albert_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Rational> c;
    for (const auto& s : j.at("d")) c.push_back(Rational::parse(s.get<std::string>()));
    for (const auto& oct : j.at("o"))
        for (const auto& s : oct) c.push_back(Rational::parse(s.get<std::string>()));
    return AlbertElement::from_coords(c);
}

std::string albert_tensor_json() {
    const auto& t = jordan_tensors();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < kDim; ++a)
        for (std::size_t b = 0; b < kDim; ++b)
            for (const auto& [c, v] : t.product[a][b])
                arr.push_back({a, b, c, v.to_pair_string()});
    nlohmann::ordered_json j;
    j["structure"] = "albert-tensor";
    j["dims"] = {27, 27, 27};
    j["entries"] = std::move(arr);
    return j.dump();
}

}  // namespace exalg
