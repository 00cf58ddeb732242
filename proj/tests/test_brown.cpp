#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/brown.hpp"

using namespace exalg;

namespace {

BrownElement random_brown(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> c(56);
    for (auto& x : c) x = Rational(d(rng));
    return BrownElement::from_coords(c);
}

const FtsStructure& fts() {
    static const FtsStructure f = calibrate_fts();
    return f;
}
const LieSubalgebraReport& simb() {
    static const LieSubalgebraReport r = similitude_algebra_B(fts());
    return r;
}

BrownElement apply_map(const std::vector<Rational>& ambient, const BrownElement& x) {
    std::vector<Rational> out(56);
    auto c = x.coords();
    for (std::size_t row = 0; row < 56; ++row)
        for (std::size_t col = 0; col < 56; ++col) {
            const Rational& m = ambient[row * 56 + col];
            if (!m.is_zero()) out[row] += m * c[col];
        }
    return BrownElement::from_coords(out);
}

}  // namespace

TEST_CASE("element basics and serialization") {
    CHECK(BrownElement::e1() + BrownElement::e2() == BrownElement::unit());
    std::mt19937_64 rng(1);
    BrownElement x = random_brown(rng);
    CHECK(brown_from_json(brown_to_json(x)) == x);
    CHECK(BrownElement::from_coords(x.coords()) == x);
}

TEST_CASE("skew form basics") {
    CHECK(skew_form(BrownElement::e1(), BrownElement::e2()) == Rational(1));
    CHECK(skew_form(BrownElement::e2(), BrownElement::e1()) == Rational(-1));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        BrownElement x = random_brown(rng), y = random_brown(rng);
        CHECK(skew_form(x, x) == Rational(0));
        CHECK(skew_form(x, y) == -skew_form(y, x));
    }
}

TEST_CASE("skew Gram matrix has rank 56") {
    ExactMatrix gram(56, 56);
    for (std::size_t i = 0; i < 56; ++i)
        for (std::size_t j = 0; j < 56; ++j)
            gram.set(i, j, skew_form(BrownElement::basis(i), BrownElement::basis(j)));
    CHECK(rank(gram) == 56);
}

TEST_CASE("calibration pins the expected coefficients") {
    CHECK(fts().b_sign == 1);
    CHECK(fts().c1 == Rational(Int(-1), Int(2)));
    CHECK(fts().c2 == Rational(-2));
    CHECK(fts().c4 == Rational(2));
    CHECK_FALSE(fts().tensor_hash.empty());
}

TEST_CASE("calibration is idempotent") {
    FtsStructure again = calibrate_fts();
    CHECK(again.c1 == fts().c1);
    CHECK(again.c2 == fts().c2);
    CHECK(again.c4 == fts().c4);
    CHECK(again.tensor_hash == fts().tensor_hash);
    CHECK(fts_to_json(again) == fts_to_json(fts()));
}

TEST_CASE("wrong residual candidates are rejected by the dimension probe") {
    auto d = probe_similitude_dimension(fts().c1, Rational(1), Rational(1), 134);
    CHECK((!d || *d != 134));
}

TEST_CASE("quartic polarization normalization q4(x,x,x,x) = 24 q(x)") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        BrownElement x = random_brown(rng);
        CHECK(q4_eval(fts(), x, x, x, x) == Rational(24) * q_eval(fts(), x));
    }
}

TEST_CASE("t is symmetric on 200 random triples") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        BrownElement x = random_brown(rng, -2, 2), y = random_brown(rng, -2, 2),
                     z = random_brown(rng, -2, 2);
        BrownElement ref = t_eval(fts(), x, y, z);
        CHECK(t_eval(fts(), y, x, z) == ref);
        CHECK(t_eval(fts(), z, y, x) == ref);
        CHECK(t_eval(fts(), x, z, y) == ref);
    }
}

TEST_CASE("duality b(t(x,y,z), w) = q4(x,y,z,w) on random quadruples") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        BrownElement x = random_brown(rng, -2, 2), y = random_brown(rng, -2, 2),
                     z = random_brown(rng, -2, 2), w = random_brown(rng, -2, 2);
        CHECK(skew_form(t_eval(fts(), x, y, z), w) == q4_eval(fts(), x, y, z, w));
    }
}

TEST_CASE("singular elements and the characterizing identity") {
    CHECK(is_singular(fts(), BrownElement::e1()));
    CHECK(is_singular(fts(), BrownElement::e2()));
    CHECK(is_singular(fts(), BrownElement::e1().scaled(Rational(7))));
    CHECK_FALSE(is_singular(fts(), BrownElement::unit()));
    CHECK_THROWS_AS(is_singular(fts(), BrownElement{}), std::invalid_argument);

    // rank-1 Albert elements embedded off-diagonally are singular
    BrownElement emb;
    emb.j = AlbertElement::diag_idempotent(0);
    CHECK(is_singular(fts(), emb));

    std::vector<BrownElement> singulars{BrownElement::e1(), BrownElement::e2(),
                                        BrownElement::e1().scaled(Rational(-3)), emb};
    for (const auto& e : singulars)
        for (std::size_t d = 0; d < 56; ++d) {
            BrownElement v = BrownElement::basis(d);
            BrownElement lhs = t_eval(fts(), e, e, v);
            BrownElement rhs = e.scaled(Rational(2) * skew_form(v, e));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("t(e1, e1, e2) = -2 e1") {
    CHECK(t_eval(fts(), BrownElement::e1(), BrownElement::e1(), BrownElement::e2()) ==
          BrownElement::e1().scaled(Rational(-2)));
}

TEST_CASE("open-orbit markers") {
    CHECK(q_eval(fts(), BrownElement::e1()) == Rational(0));
    BrownElement t111 =
        t_eval(fts(), BrownElement::e1(), BrownElement::e1(), BrownElement::e1());
    CHECK(skew_form(BrownElement::e1(), t111) == Rational(0));
    BrownElement one = BrownElement::unit();
    CHECK(skew_form(one, t_eval(fts(), one, one, one)) != Rational(0));
}

TEST_CASE("b-condition stage has dimension 1597") {
    CHECK(b_condition_dimension() == 1597);
}

TEST_CASE("similitude algebra has dimension 134 with certified basis") {
    CHECK(simb().dimension() == 134);
    CHECK(simb().basis.certification == Certification::ExactlyVerified);
    CHECK(simb().basis.primes.size() >= 2);
    CHECK(simb().basis.ambient_dim == 3137);
}

TEST_CASE("identity with lambda 2 lies in the similitude algebra") {
    std::vector<Rational> v(3137);
    for (std::size_t i = 0; i < 56; ++i) v[i * 56 + i] = Rational(1);
    v[3136] = Rational(2);
    CHECK(subspace_contained({v}, simb().basis.vectors));
}

TEST_CASE("basis members satisfy the defining conditions directly") {
    std::mt19937_64 rng(6);
    for (std::size_t pick : {0u, 57u, 133u}) {
        const auto& vec = simb().basis.vectors[pick];
        const Rational& lam = vec[3136];
        for (int i = 0; i < 3; ++i) {
            BrownElement u = random_brown(rng, -2, 2), v = random_brown(rng, -2, 2),
                         w = random_brown(rng, -2, 2);
            CHECK(skew_form(apply_map(vec, u), v) + skew_form(u, apply_map(vec, v)) ==
                  lam * skew_form(u, v));
            BrownElement lhs = t_eval(fts(), apply_map(vec, u), v, w) +
                               t_eval(fts(), u, apply_map(vec, v), w) +
                               t_eval(fts(), u, v, apply_map(vec, w)) -
                               apply_map(vec, t_eval(fts(), u, v, w));
            CHECK(lhs == t_eval(fts(), u, v, w).scaled(lam));
        }
    }
}

TEST_CASE("stabilizers inside the similitude algebra") {
    auto st = stabilizer_dimensions_B(simb());
    CHECK(st.stab_one.dimension() == 78);
    CHECK(st.stab_pair.dimension() == 80);
    CHECK(simb().dimension() - st.stab_one.dimension() == 56);
    CHECK(simb().dimension() - st.stab_pair.dimension() == 54);
    CHECK(st.stab_pair.dimension() - st.stab_one.dimension() == 2);
    CHECK(subspace_contained(st.stab_one.basis.vectors, st.stab_pair.basis.vectors));
}

TEST_CASE("calibration file round trip and hash verification") {
    std::string file = fts_to_json(fts());
    FtsStructure loaded = fts_from_json(file);
    CHECK(loaded.tensor_hash == fts().tensor_hash);
    CHECK(loaded.c1 == fts().c1);

    std::string tampered = file;
    auto pos = tampered.find("\"c4\": \"2/1\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 11, "\"c4\": \"3/1\"");
    CHECK_THROWS_AS(fts_from_json(tampered), CalibrationError);
}

TEST_CASE("t tensor dumps are stable") {
    CHECK(brown_t_tensor_json(fts()) == brown_t_tensor_json(fts()));
    std::string csv = brown_t_tensor_csv(fts());
    CHECK(csv.find("a,b,c,component,value") == 0);
}
