// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "core/demos.hpp"
#include "core/suites.hpp"
#include "core/weyl.hpp"

using namespace exalg;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
        }
    }

    void finish(double budget_seconds) {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                             .count();
        if (elapsed > budget_seconds) {
            std::ostringstream os;
            os << "runtime " << elapsed << "s exceeds budget " << budget_seconds << "s";
            problems_.push_back(os.str());
        }
        if (problems_.empty()) {
            std::printf("PASS criterion %d: %s (%.2fs)\n", number_, title_.c_str(), elapsed);
        } else {
            ++failures;
            std::printf("FAIL criterion %d: %s (%.2fs)\n", number_, title_.c_str(), elapsed);
            for (const auto& p : problems_) std::printf("      - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

Octonion random_oct(std::mt19937_64& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> c(8);
    for (auto& x : c) x = Rational(d(rng));
    return Octonion::from_coords(c);
}

AlbertElement random_albert(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> c(27);
    for (auto& x : c) x = Rational(d(rng));
    return AlbertElement::from_coords(c);
}

void criterion_1_octonion() {
    Criterion cr(1, "octonion composition, alternativity, Moufang (random + symbolic)");
    std::mt19937_64 rng(1);
    int comp = 0;
    for (int i = 0; i < 1000; ++i) {
        Octonion x = random_oct(rng), y = random_oct(rng);
        if (oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)) ++comp;
    }
    cr.require(comp == 1000, "composition failed on random pairs");
    int alt = 0;
    for (int i = 0; i < 500; ++i) {
        Octonion x = random_oct(rng), y = random_oct(rng);
        if (oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y) &&
            oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)))
            ++alt;
    }
    cr.require(alt == 500, "alternativity failed on random pairs");
    int mouf = 0;
    for (int i = 0; i < 500; ++i) {
        Octonion u = random_oct(rng), x = random_oct(rng), y = random_oct(rng);
        if (oct_mul(oct_mul(u, x), oct_mul(y, u)) == oct_mul(u, oct_mul(oct_mul(x, y), u)))
            ++mouf;
    }
    cr.require(mouf == 500, "Moufang failed on random triples");
    bool symbolic = true;
    for (std::size_t i = 0; i < 8 && symbolic; ++i)
        for (std::size_t i2 = i; i2 < 8 && symbolic; ++i2)
            for (std::size_t j = 0; j < 8 && symbolic; ++j)
                for (std::size_t j2 = j; j2 < 8; ++j2) {
                    Octonion ei = Octonion::basis(i), ei2 = Octonion::basis(i2);
                    Octonion ej = Octonion::basis(j), ej2 = Octonion::basis(j2);
                    Rational lhs = oct_norm_polar(oct_mul(ei, ej), oct_mul(ei2, ej2)) +
                                   oct_norm_polar(oct_mul(ei, ej2), oct_mul(ei2, ej));
                    if (lhs != oct_norm_polar(ei, ei2) * oct_norm_polar(ej, ej2)) {
                        symbolic = false;
                        break;
                    }
                }
    cr.require(symbolic, "polarized composition certificate failed on basis pairs");
    cr.finish(10.0);
}

void criterion_2_albert() {
    Criterion cr(2, "Albert identities, norm values, rank-1 locus");
    std::mt19937_64 rng(2);
    int ch = 0, adj = 0;
    for (int i = 0; i < 500; ++i) {
        AlbertElement x = random_albert(rng);
        AlbertElement x2 = jordan_mul_fast(x, x);
        AlbertElement x3 = jordan_mul_fast(x, x2);
        Rational t1 = alb_trace(x);
        Rational s = (t1 * t1 - alb_trace(x2)) / Rational(2);
        Rational n = alb_norm(x);
        if ((x3 - x2.scaled(t1) + x.scaled(s) - AlbertElement::unit().scaled(n)).is_zero()) ++ch;
        if (jordan_mul_fast(x, adjoint(x)) == AlbertElement::unit().scaled(n) &&
            adjoint(adjoint(x)) == x.scaled(n))
            ++adj;
    }
    cr.require(ch == 500, "Cayley-Hamilton failed");
    cr.require(adj == 500, "adjoint identities failed");
    cr.require(alb_norm(AlbertElement::diag(Rational(2), Rational(3), Rational(5))) ==
                   Rational(30),
               "N(diag(2,3,5)) != 30");
    cr.require(norm_polarization(AlbertElement::diag_idempotent(0),
                                 AlbertElement::diag_idempotent(1),
                                 AlbertElement::diag_idempotent(2)) == Rational(1),
               "N3(e1,e2,e3) != 1");
    std::uniform_int_distribution<int> d(-6, 6);
    bool locus = true;
    for (int i = 0; i < 200 && locus; ++i) {
        Rational a(d(rng)), b(d(rng)), c(d(rng));
        AlbertElement x = AlbertElement::diag(a, b, c);
        bool axes = (a.is_zero() && b.is_zero()) || (a.is_zero() && c.is_zero()) ||
                    (b.is_zero() && c.is_zero());
        bool r1 = !x.is_zero() && cross(x, x).is_zero();
        if (adjoint(x) != AlbertElement::diag(b * c, c * a, a * b) || r1 != (axes && !x.is_zero()))
            locus = false;
    }
    cr.require(locus, "diagonal rank-1 locus is not the union of the three axes");
    cr.finish(60.0);
}

void criterion_3_lie_dimensions() {
    Criterion cr(3, "Lie dimensions 52/79/28/31 with exact bases, orbit bookkeeping");
    auto mm_start = std::chrono::steady_clock::now();
    LieOptions lie;
    auto der = derivation_algebra(lie);
    auto sim = similitude_algebra(lie);
    auto stabs = stabilizer_dimensions(der, sim);
    double mm_elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - mm_start).count();
    cr.require(der.dimension() == 52, "dim Der(J) != 52");
    cr.require(der.basis.certification == Certification::ExactlyVerified,
               "derivation basis not exactly certified");
    cr.require(sim.dimension() == 79, "dim LieSim(J) != 79");
    cr.require(sim.basis.certification == Certification::ExactlyVerified,
               "similitude basis not exactly certified");
    cr.require(stabs.aut_lv.dimension() == 28, "dim {D : D(L) in L} != 28");
    cr.require(stabs.stab_lines.dimension() == 31, "dim stab(line triple) != 31");
    cr.require(der.dimension() - stabs.aut_lv.dimension() == 24, "52 - 28 != 24");
    cr.require(stabs.stab_diag.dimension() == stabs.aut_lv.dimension() + 3, "31 != 28 + 3");
    cr.require(sim.dimension() - stabs.stab_lines.dimension() == 48, "79 - 31 != 48");
    cr.require(sim.dimension() - stabs.stab_one.dimension() == 27, "79 - 52 != 27");
    cr.require(stabs.stab_one_equals_derivations, "stabilizer of 1 is not the derivations");
    cr.require(mm_elapsed < 120.0, "multi-modular path exceeded 2 minutes");

    auto ff_start = std::chrono::steady_clock::now();
    LieOptions ff;
    ff.strategy = KernelStrategy::FractionFree;
    auto der_ff = derivation_algebra(ff);
    double ff_elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - ff_start).count();
    cr.require(der_ff.dimension() == 52, "fraction-free dim Der(J) != 52");
    cr.require(subspace_contained(der_ff.basis.vectors, der.basis.vectors) &&
                   subspace_contained(der.basis.vectors, der_ff.basis.vectors),
               "fraction-free and multi-modular kernels differ");
    cr.require(ff_elapsed < 600.0, "fraction-free path exceeded 10 minutes");
    cr.finish(720.0);
}

std::optional<FtsStructure> criterion_4_brown() {
    Criterion cr(4, "Brown calibration, singular identities, dims 134/78/80");
    std::optional<FtsStructure> result;
    try {
        result = calibrate_fts();
    } catch (const std::exception& e) {
        cr.require(false, std::string("calibration failed: ") + e.what());
        cr.finish(1800.0);
        return std::nullopt;
    }
    const FtsStructure& fts = *result;
    for (int i : {0, 1}) {
        BrownElement e = i == 0 ? BrownElement::e1() : BrownElement::e2();
        bool identity = true;
        for (std::size_t d = 0; d < 56 && identity; ++d) {
            BrownElement v = BrownElement::basis(d);
            if (t_eval(fts, e, e, v) != e.scaled(Rational(2) * skew_form(v, e))) identity = false;
        }
        cr.require(identity, "singular identity fails for e_" + std::to_string(i + 1));
    }
    BrownOptions opts;
    auto simb = similitude_algebra_B(fts, opts);
    cr.require(simb.dimension() == 134, "dim LieSim(B) != 134");
    cr.require(simb.basis.certification == Certification::ExactlyVerified,
               "similitude basis not exactly certified");
    cr.require(simb.basis.primes.size() >= 2, "fewer than 2 agreeing primes");
    for (auto p : simb.basis.primes)
        cr.require(p > (1ull << 30) && p < (1ull << 31), "prime not 31-bit");
    auto stabs = stabilizer_dimensions_B(simb);
    cr.require(stabs.stab_one.dimension() == 78, "dim stab(1) != 78");
    cr.require(stabs.stab_pair.dimension() == 80, "dim stab(line pair) != 80");
    cr.require(simb.dimension() - stabs.stab_one.dimension() == 56, "134 - 78 != 56");
    cr.require(simb.dimension() - stabs.stab_pair.dimension() == 54, "134 - 80 != 54");
    cr.require(stabs.stab_pair.dimension() - stabs.stab_one.dimension() == 2, "80 - 78 != 2");
    cr.finish(1800.0);
    return result;
}

void criterion_5_weyl() {
    Criterion cr(5, "Weyl pair-orbit counts 4/3/3/2 and orbit sizes");
    auto e7 = RootSystemData::parse("E7");
    auto e6 = RootSystemData::parse("E6");
    auto d6 = RootSystemData::parse("D6");
    cr.require(weight_orbit(e7, 7).size() == 56, "E7 node 7 orbit size != 56");
    cr.require(weight_orbit(e6, 1).size() == 27, "E6 node 1 orbit size != 27");
    cr.require(weight_orbit(d6, 1).size() == 12, "D6 node 1 orbit size != 12");
    cr.require(parabolic_pair_orbit_count(e7, 7).orbits == 4, "E7/P7 pair orbits != 4");
    cr.require(parabolic_pair_orbit_count(e6, 1).orbits == 3, "E6/P1 pair orbits != 3");
    cr.require(parabolic_pair_orbit_count(d6, 1).orbits == 3, "D6/P1 pair orbits != 3");
    for (int p : {2, 3, 5}) {
        auto a = RootSystemData::make(RootSystemType::A, p - 1);
        cr.require(weight_orbit(a, 1).size() == static_cast<std::size_t>(p),
                   "A_" + std::to_string(p - 1) + " orbit size != p");
        cr.require(parabolic_pair_orbit_count(a, 1).orbits == 2,
                   "A_" + std::to_string(p - 1) + " pair orbits != 2");
    }
    for (auto [sys, node] : {std::pair{&e7, 7}, {&e6, 1}, {&d6, 1}}) {
        auto pr = parabolic_pair_orbit_count(*sys, node);
        std::size_t sum = 0;
        for (auto s : pr.orbit_sizes) sum += s;
        cr.require(sum == weight_orbit(*sys, node).size(), "partition sum mismatch");
    }
    cr.finish(1.0);
}

void criterion_6_demos() {
    Criterion cr(6, "torus fixed-line counts and 50 random isotropic binary forms");
    cr.require(torus_fixed_lines({Rational(1), Rational(-1)}).size() == 2, "p = 2 count");
    cr.require(torus_fixed_lines({Rational(1), Rational(2), Rational(4)}).size() == 3,
               "p = 3 count");
    cr.require(torus_fixed_lines(
                   {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)})
                       .size() == 5,
               "p = 5 count");
    int good = 0;
    for (int i = 0; i < 50; ++i) {
        auto f = random_isotropic_form(6, i);
        if (isotropic_lines(f).lines.size() == 2 && hyperbolic_basis_uniqueness_check(f)) ++good;
    }
    cr.require(good == 50, "random isotropic forms failed");
    cr.finish(5.0);
}

void criterion_7_lemma_similitude() {
    Criterion cr(7, "Moufang related triples: multiplier n(u)^4, 1 -> diag(n^2, n, n)");
    std::mt19937_64 rng(7);
    int good = 0;
    for (int i = 0; i < 20; ++i) {
        Octonion u;
        do {
            u = random_oct(rng);
        } while (oct_norm(u).is_zero());
        Rational n = oct_norm(u);
        auto f = lemma_similitude(moufang_alphas(u), moufang_triple(u));
        if (!f) continue;
        if (f->multiplier != n * n * n * n) continue;
        auto img = AlbertElement::from_coords(f->map.apply(AlbertElement::unit().coords()));
        if (img == AlbertElement::diag(n * n, n, n)) ++good;
    }
    cr.require(good == 20, "accepted similitudes: " + std::to_string(good) + "/20");
    cr.finish(30.0);
}

void criterion_8_reproducibility(const std::string& calibration_path) {
    Criterion cr(8, "byte-identical reports for identical seed and calibration");
    SuiteOptions opts;
    opts.seed = 42;
    opts.calibration_path = calibration_path;
    for (const char* suite : {"albert", "weyl", "demos"}) {
        auto a = run_suite(suite, opts);
        auto b = run_suite(suite, opts);
        cr.require(a.to_json() == b.to_json(),
                   std::string("suite ") + suite + " reports differ");
    }
    auto brown_a = run_suite("brown", opts);
    auto brown_b = run_suite("brown", opts);
    cr.require(brown_a.to_json() == brown_b.to_json(), "brown reports differ");
    cr.require(brown_a.all_pass(), "brown suite failed");
    cr.finish(600.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1_octonion();
    criterion_2_albert();
    criterion_3_lie_dimensions();
    auto fts = criterion_4_brown();
    criterion_5_weyl();
    criterion_6_demos();
    criterion_7_lemma_similitude();
    if (fts) {
        std::string path = "acceptance-calibration.json";
        {
            std::ofstream out(path);
            out << fts_to_json(*fts);
        }
        criterion_8_reproducibility(path);
        std::remove(path.c_str());
    } else {
        Criterion cr(8, "byte-identical reports for identical seed and calibration");
        cr.require(false, "skipped: no calibration structure");
        cr.finish(600.0);
    }

    if (failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
