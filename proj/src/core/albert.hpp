#ifndef EXALG_ALBERT_HPP
#define EXALG_ALBERT_HPP

#include <array>
#include <string>
#include <vector>

#include "core/kernel.hpp"
#include "core/octonion.hpp"

namespace exalg {

/// Element of the split Albert algebra H3(O): the hermitian matrix
///   [[d0,       o2,        conj(o1)],
///    [conj(o2), d1,        o0      ],
///    [o1,       conj(o0),  d2      ]]
/// stored as 3 diagonal scalars and 3 octonions, 27 free coordinates.
/// Coordinate order: d0 d1 d2, then o0 (8), o1 (8), o2 (8).
struct AlbertElement {
    std::array<Rational, 3> d{};
    std::array<Octonion, 3> o{};

    static AlbertElement unit();
    static AlbertElement diag(const Rational& a0, const Rational& a1, const Rational& a2);
    /// e_i, the i-th diagonal primitive idempotent (i in 0..2).
    static AlbertElement diag_idempotent(std::size_t i);
    static AlbertElement basis(std::size_t k);
    static AlbertElement from_coords(const std::vector<Rational>& c);

    Rational coord(std::size_t k) const;
    std::vector<Rational> coords() const;
    bool is_zero() const;
    friend bool operator==(const AlbertElement& x, const AlbertElement& y) = default;

    AlbertElement operator+(const AlbertElement& y) const;
    AlbertElement operator-(const AlbertElement& y) const;
    AlbertElement scaled(const Rational& s) const;
};

/// Jordan product x∘y = (xy + yx)/2 via octonion matrix multiplication.
AlbertElement jordan_mul(const AlbertElement& x, const AlbertElement& y);

Rational alb_trace(const AlbertElement& x);
/// T(x, y) = trace(x∘y).
Rational trace_form(const AlbertElement& x, const AlbertElement& y);

/// Cubic norm from the power traces: N(x) = (t1^3 - 3 t1 t2 + 2 t3) / 6
/// with t_k = trace of the k-th Jordan power.
Rational alb_norm(const AlbertElement& x);

/// Full polarization N3 with N3(x,x,x) = 6 N(x).
Rational norm_polarization(const AlbertElement& x, const AlbertElement& y,
                           const AlbertElement& z);

/// x# = x∘x - trace(x) x + s(x) 1 with s(x) = (trace(x)^2 - trace(x∘x))/2.
AlbertElement adjoint(const AlbertElement& x);
/// Polarization of the adjoint: (x+y)# - x# - y#.
AlbertElement cross(const AlbertElement& x, const AlbertElement& y);
/// x spans a point of the Cayley plane: x != 0 and x x x = 0.
bool is_rank_one(const AlbertElement& x);

/// Basis of the trace-form orthogonal complement V of the diagonal L,
/// computed as an exact kernel; dim V = 24.
std::vector<AlbertElement> springer_complement();

/// Structure data computed once from the definitional product.
struct JordanTensors {
    /// product[a][b]: sparse e_a ∘ e_b (all ordered pairs).
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rational>>>> product;
    /// trace-form Gram matrix.
    ExactMatrix gram{27, 27};
    /// cross(e_a, e_b), symmetric.
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rational>>>> sharp_polar;
    /// Norm trilinear tensor entries (a <= b <= c, value), fully symmetric.
    struct T3Entry {
        std::uint32_t a, b, c;
        Rational val;
    };
    std::vector<T3Entry> t3;
    /// t3 indexed by ordered pair (b, c): list of (a, value) with
    /// value = N3(e_a, e_b, e_c).
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> t3_by_pair;  // size 27*27
};
const JordanTensors& jordan_tensors();

/// Fast tensor-based product (bilinear extension of the basis table).
AlbertElement jordan_mul_fast(const AlbertElement& x, const AlbertElement& y);

std::string albert_to_json(const AlbertElement& x);
AlbertElement albert_from_json(const std::string& text);
/// 27x27x27 Jordan product structure tensor, sparse sorted JSON.
std::string albert_tensor_json();

}  // namespace exalg

#endif
