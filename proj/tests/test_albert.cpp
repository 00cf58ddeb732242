#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/albert.hpp"

using namespace exalg;

namespace {

AlbertElement random_albert(std::mt19937_64& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> c(27);
    for (auto& x : c) x = Rational(d(rng));
    return AlbertElement::from_coords(c);
}

const AlbertElement e1 = AlbertElement::diag_idempotent(0);
const AlbertElement e2 = AlbertElement::diag_idempotent(1);
const AlbertElement e3 = AlbertElement::diag_idempotent(2);

}  // namespace

TEST_CASE("diagonal idempotents") {
    CHECK(jordan_mul(e1, e1) == e1);
    CHECK(jordan_mul(e1, e2).is_zero());
    CHECK(jordan_mul(e2, e3).is_zero());
    CHECK(e1 + e2 + e3 == AlbertElement::unit());
    AlbertElement one = AlbertElement::unit();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        AlbertElement x = random_albert(rng);
        CHECK(jordan_mul(one, x) == x);
    }
}

TEST_CASE("product is commutative and the fast path agrees with the matrix path") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        AlbertElement x = random_albert(rng), y = random_albert(rng);
        AlbertElement p = jordan_mul(x, y);
        CHECK(p == jordan_mul(y, x));
        CHECK(p == jordan_mul_fast(x, y));
    }
}

TEST_CASE("Jordan identity on 300 random pairs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        AlbertElement x = random_albert(rng, -3, 3), y = random_albert(rng, -3, 3);
        AlbertElement x2 = jordan_mul_fast(x, x);
        AlbertElement lhs = jordan_mul_fast(jordan_mul_fast(x2, y), x);
        AlbertElement rhs = jordan_mul_fast(x2, jordan_mul_fast(y, x));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("power associativity on 300 random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        AlbertElement x = random_albert(rng, -3, 3);
        AlbertElement x2 = jordan_mul_fast(x, x);
        CHECK(jordan_mul_fast(x, jordan_mul_fast(x, x2)) == jordan_mul_fast(x2, x2));
    }
}

TEST_CASE("norm examples") {
    CHECK(alb_norm(AlbertElement::diag(Rational(2), Rational(3), Rational(5))) == Rational(30));
    CHECK(alb_norm(AlbertElement::unit()) == Rational(1));
    CHECK(alb_norm(AlbertElement::diag(Rational(1), Rational(1), Rational(0))) == Rational(0));

    // power-trace intermediate values behind N(diag(2,3,5)) = 30
    AlbertElement x = AlbertElement::diag(Rational(2), Rational(3), Rational(5));
    AlbertElement x2 = jordan_mul(x, x);
    AlbertElement x3 = jordan_mul(x, x2);
    CHECK(alb_trace(x) == Rational(10));
    CHECK(alb_trace(x2) == Rational(38));
    CHECK(alb_trace(x3) == Rational(160));
}

TEST_CASE("norm polarization examples") {
    CHECK(norm_polarization(e1, e2, e3) == Rational(1));
    CHECK(norm_polarization(e1, e1, e2) == Rational(0));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        AlbertElement x = random_albert(rng);
        CHECK(norm_polarization(x, x, x) == Rational(6) * alb_norm(x));
    }
}

TEST_CASE("norm polarization agrees with the trace-cross pairing") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        AlbertElement x = random_albert(rng), y = random_albert(rng), z = random_albert(rng);
        CHECK(norm_polarization(x, y, z) == trace_form(x, cross(y, z)));
    }
}

TEST_CASE("adjoint and rank-1 examples") {
    CHECK(adjoint(e1).is_zero());
    CHECK(is_rank_one(e1));
    CHECK(is_rank_one(e2));
    CHECK(is_rank_one(e3));
    CHECK_FALSE(is_rank_one(AlbertElement::unit()));
    CHECK(adjoint(AlbertElement::unit()) == AlbertElement::unit());
    CHECK_FALSE(is_rank_one(AlbertElement{}));  // zero is excluded by definition
}

TEST_CASE("Cayley-Hamilton and adjoint identities on 500 random elements") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        AlbertElement x = random_albert(rng, -3, 3);
        AlbertElement x2 = jordan_mul_fast(x, x);
        AlbertElement x3 = jordan_mul_fast(x, x2);
        Rational t1 = alb_trace(x);
        Rational s = (t1 * t1 - alb_trace(x2)) / Rational(2);
        Rational n = alb_norm(x);
        AlbertElement ch =
            x3 - x2.scaled(t1) + x.scaled(s) - AlbertElement::unit().scaled(n);
        CHECK(ch.is_zero());
        CHECK(jordan_mul_fast(x, adjoint(x)) == AlbertElement::unit().scaled(n));
        CHECK(adjoint(adjoint(x)) == x.scaled(n));
        CHECK(cross(x, x) == adjoint(x) + adjoint(x));
    }
}

TEST_CASE("rank-1 locus in the diagonal is the union of the three axes") {
    // adjoint(diag(a,b,c)) = diag(bc, ca, ab), so the locus is pairwise
    // products vanishing: at least two coordinates zero.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng)), b(d(rng)), c(d(rng));
        AlbertElement x = AlbertElement::diag(a, b, c);
        CHECK(adjoint(x) == AlbertElement::diag(b * c, c * a, a * b));
        bool on_axes = (a.is_zero() && b.is_zero()) || (a.is_zero() && c.is_zero()) ||
                       (b.is_zero() && c.is_zero());
        bool rank1 = !x.is_zero() && cross(x, x).is_zero();
        CHECK(rank1 == (on_axes && !x.is_zero()));
    }
    for (long lam : {1L, -2L, 7L}) {
        CHECK(is_rank_one(e1.scaled(Rational(lam))));
        CHECK(is_rank_one(e2.scaled(Rational(lam))));
        CHECK(is_rank_one(e3.scaled(Rational(lam))));
    }
}

TEST_CASE("trace form has rank 27") {
    CHECK(rank(jordan_tensors().gram) == 27);
}

TEST_CASE("springer complement") {
    auto v = springer_complement();
    CHECK(v.size() == 24);
    for (const auto& x : v)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(trace_form(AlbertElement::diag_idempotent(i), x) == Rational(0));
    // V contains all off-diagonal coordinate vectors: T(e_i, basis(k)) = 0
    // for k >= 3, so each octonion coordinate is orthogonal to L.
    for (std::size_t k = 3; k < 27; ++k) {
        bool found = false;
        for (const auto& x : v)
            if (x == AlbertElement::basis(k)) found = true;
        CHECK(found);
    }
}

TEST_CASE("albert serialization round trip") {
    std::mt19937_64 rng(29);
    AlbertElement x = random_albert(rng);
    CHECK(albert_from_json(albert_to_json(x)) == x);
}
