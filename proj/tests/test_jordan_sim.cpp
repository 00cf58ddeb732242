#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/jordan_sim.hpp"

using namespace exalg;

namespace {

Octonion random_invertible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    for (;;) {
        std::vector<Rational> c(8);
        for (auto& x : c) x = Rational(d(rng));
        Octonion u = Octonion::from_coords(c);
        if (!oct_norm(u).is_zero()) return u;
    }
}

// Shared expensive computations (done once per test binary).
const LieSubalgebraReport& der() {
    static const LieSubalgebraReport r = derivation_algebra();
    return r;
}
const LieSubalgebraReport& sim() {
    static const LieSubalgebraReport r = similitude_algebra();
    return r;
}
const StabilizerTable& stabs() {
    static const StabilizerTable t = stabilizer_dimensions(der(), sim());
    return t;
}

AlbertElement apply_map(const std::vector<Rational>& ambient, const AlbertElement& x) {
    std::vector<Rational> out(27);
    auto c = x.coords();
    for (std::size_t row = 0; row < 27; ++row)
        for (std::size_t col = 0; col < 27; ++col) {
            const Rational& m = ambient[row * 27 + col];
            if (!m.is_zero()) out[row] += m * c[col];
        }
    return AlbertElement::from_coords(out);
}

}  // namespace

TEST_CASE("similitude predicate trivial examples") {
    CHECK(is_jordan_similitude(ExactMatrix::identity(27)) == Rational(1));
    ExactMatrix lam(27, 27);
    for (std::size_t i = 0; i < 27; ++i) lam.set(i, i, Rational(2));
    CHECK(is_jordan_similitude(lam) == Rational(8));
    ExactMatrix bad = ExactMatrix::identity(27);
    bad.set(0, 0, Rational(3));
    CHECK_FALSE(is_jordan_similitude(bad).has_value());
}

TEST_CASE("cyclic block permutation is a similitude with multiplier 1") {
    // X -> P X P^t for the cyclic permutation: diag shifts, octonion slots
    // shift without conjugation.
    ExactMatrix m(27, 27);
    for (std::size_t i = 0; i < 3; ++i) m.set((i + 2) % 3, i, Rational(1));
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t k = 0; k < 8; ++k) m.set(3 + 8 * ((s + 2) % 3) + k, 3 + 8 * s + k, Rational(1));
    CHECK(is_jordan_similitude(m) == Rational(1));
}

TEST_CASE("transposition block permutation with conjugations is a similitude") {
    // Swap rows/cols 1,2: d0<->d1, o0 -> conj(o1), o1 -> conj(o0), o2 -> conj(o2).
    ExactMatrix m(27, 27);
    m.set(1, 0, Rational(1));
    m.set(0, 1, Rational(1));
    m.set(2, 2, Rational(1));
    auto put_conj_block = [&m](std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < 8; ++k) {
            Octonion img = oct_conj(Octonion::basis(k));
            for (std::size_t i = 0; i < 8; ++i)
                if (!img.coord(i).is_zero()) m.set(3 + 8 * dst + i, 3 + 8 * src + k, img.coord(i));
        }
    };
    put_conj_block(1, 0);
    put_conj_block(0, 1);
    put_conj_block(2, 2);
    CHECK(is_jordan_similitude(m) == Rational(1));
}

TEST_CASE("lemma similitude: identity triple") {
    RelatedTripleCandidate t{{ExactMatrix::identity(8), Rational(1)},
                             {ExactMatrix::identity(8), Rational(1)},
                             {ExactMatrix::identity(8), Rational(1)}};
    auto f = lemma_similitude({Rational(1), Rational(1), Rational(1)}, t);
    REQUIRE(f.has_value());
    CHECK(f->multiplier == Rational(1));
    CHECK(f->map == ExactMatrix::identity(27));
}

TEST_CASE("lemma similitude: multiplier mismatch is an error") {
    RelatedTripleCandidate t{{ExactMatrix::identity(8), Rational(1)},
                             {ExactMatrix::identity(8), Rational(1)},
                             {ExactMatrix::identity(8), Rational(1)}};
    CHECK_THROWS_AS(lemma_similitude({Rational(2), Rational(1), Rational(1)}, t),
                    MultiplierMismatch);
}

TEST_CASE("Moufang related triples for 20 random invertible octonions") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20; ++i) {
        Octonion u = random_invertible(rng);
        Rational n = oct_norm(u);
        auto triple = moufang_triple(u);
        auto alpha = moufang_alphas(u);
        auto f = lemma_similitude(alpha, triple);
        REQUIRE(f.has_value());
        CHECK(f->multiplier == n * n * n * n);
        // image of 1 is diag(alpha0, alpha1, alpha2) = diag(n^2, n, n)
        auto img = AlbertElement::from_coords(f->map.apply(AlbertElement::unit().coords()));
        CHECK(img == AlbertElement::diag(n * n, n, n));
    }
}

TEST_CASE("calibrated Moufang slots are frozen and in range") {
    const auto& slots = moufang_slots();
    CHECK(slots.word[0] >= 0);
    CHECK(slots.word[0] < 16);
    for (int i : {1, 2}) {
        CHECK(slots.word[i] >= 0);
        CHECK(slots.word[i] < 64);
    }
    const auto& again = moufang_slots();
    CHECK(again.word == slots.word);
}

TEST_CASE("norm trilinear part is tr((o0 o1) o2)") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> d(-4, 4);
    auto roct = [&] {
        std::vector<Rational> c(8);
        for (auto& x : c) x = Rational(d(rng));
        return Octonion::from_coords(c);
    };
    for (int i = 0; i < 30; ++i) {
        AlbertElement x;
        x.o = {roct(), roct(), roct()};
        CHECK(alb_norm(x) == oct_trace(oct_mul(oct_mul(x.o[0], x.o[1]), x.o[2])));
    }
}

TEST_CASE("derivation algebra has dimension 52 with certified basis") {
    CHECK(der().dimension() == 52);
    CHECK(der().basis.certification == Certification::ExactlyVerified);
    CHECK(der().basis.primes.size() >= 2);
}

TEST_CASE("derivations kill the unit and are infinitesimal norm isometries") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (const auto& v : der().basis.vectors) {
        CHECK(apply_map(v, AlbertElement::unit()).is_zero());
        CHECK(v[729].is_zero());
    }
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> c(27);
        for (auto& x : c) x = Rational(dist(rng));
        AlbertElement x = AlbertElement::from_coords(c);
        const auto& v = der().basis.vectors[i % der().basis.vectors.size()];
        CHECK(norm_polarization(apply_map(v, x), x, x) == Rational(0));
    }
}

TEST_CASE("similitude algebra has dimension 79") {
    CHECK(sim().dimension() == 79);
    CHECK(sim().basis.certification == Certification::ExactlyVerified);
}

TEST_CASE("identity with lambda 3 lies in the similitude algebra") {
    std::vector<Rational> v(730);
    for (std::size_t i = 0; i < 27; ++i) v[i * 27 + i] = Rational(1);
    v[729] = Rational(3);
    CHECK(subspace_contained({v}, sim().basis.vectors));
}

TEST_CASE("derivations sit inside the similitude algebra with lambda 0") {
    CHECK(subspace_contained(der().basis.vectors, sim().basis.vectors));
}

TEST_CASE("stabilizer dimensions and exact-sequence bookkeeping") {
    const auto& t = stabs();
    CHECK(t.stab_diag.dimension() == 31);
    CHECK(t.stab_lines.dimension() == 31);
    CHECK(t.aut_lv.dimension() == 28);
    CHECK(t.stab_one.dimension() == 52);
    CHECK(t.stab_diag_equals_stab_lines);
    CHECK(t.stab_one_equals_derivations);
    // 52 - 28 = 24, 31 = 28 + 3, 79 - 31 = 48, 79 - 52 = 27
    CHECK(der().dimension() - t.aut_lv.dimension() == 24);
    CHECK(t.stab_diag.dimension() == t.aut_lv.dimension() + 3);
    CHECK(sim().dimension() - t.stab_lines.dimension() == 48);
    CHECK(sim().dimension() - t.stab_one.dimension() == 27);
}

TEST_CASE("fraction-free derivation kernel cross-check") {
    LieOptions opts;
    opts.strategy = KernelStrategy::FractionFree;
    auto ff = derivation_algebra(opts);
    CHECK(ff.dimension() == 52);
    CHECK(subspace_contained(ff.basis.vectors, der().basis.vectors));
    CHECK(subspace_contained(der().basis.vectors, ff.basis.vectors));
}

TEST_CASE("cubic subalgebra from a regular element") {
    auto r = cubic_subalgebra_from_regular(
        AlbertElement::diag(Rational(0), Rational(1), Rational(2)));
    CHECK(r.regular);
    CHECK(r.dimension == 3);
    CHECK(r.basis.size() == 3);

    auto one = cubic_subalgebra_from_regular(AlbertElement::unit());
    CHECK_FALSE(one.regular);
    CHECK(one.dimension == 1);

    auto idem = cubic_subalgebra_from_regular(AlbertElement::diag_idempotent(0));
    CHECK_FALSE(idem.regular);
    CHECK(idem.dimension == 2);
}

TEST_CASE("lie report json shape") {
    auto j = lie_report_json(der(), false);
    CHECK(j.find("\"dimension\":52") != std::string::npos);
    CHECK(j.find("exactly-verified") != std::string::npos);
}
