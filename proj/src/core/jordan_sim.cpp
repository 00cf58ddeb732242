#include "core/jordan_sim.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace exalg {

namespace {

constexpr std::size_t kJ = 27;
constexpr std::uint32_t kMapDim = kJ * kJ;        // 729
constexpr std::uint32_t kLambdaCol = kMapDim;     // multiplier component

std::uint32_t mcol(std::size_t row, std::size_t col) {
    return static_cast<std::uint32_t>(row * kJ + col);
}

ZRow take_row(std::map<std::uint32_t, Rational>& acc) {
    Int den(1);
    for (const auto& [c, v] : acc)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
    ZRow row;
    for (auto& [c, v] : acc)
        if (!v.is_zero()) row.nz.emplace_back(c, Int(v.num() * (den / v.den())));
    acc.clear();
    return row;
}

std::vector<std::vector<Rational>> dense_columns(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> cols(m.cols(), std::vector<Rational>(m.rows()));
    for (const auto& [k, v] : m.entries()) cols[k.second][k.first] = v;
    return cols;
}

}  // namespace

std::optional<Rational> is_jordan_similitude(const ExactMatrix& m27) {
    if (m27.rows() != kJ || m27.cols() != kJ)
        throw std::invalid_argument("is_jordan_similitude: map must be 27x27");
    const auto& T = jordan_tensors();
    auto M = dense_columns(m27);

    Rational mu = alb_norm(AlbertElement::from_coords(m27.apply(AlbertElement::unit().coords())));
    if (mu.is_zero()) return std::nullopt;

    // Cheap rejection on fixed pseudo-random points before the full
    // symbolic identity over all symmetric basis triples.
    for (std::uint64_t probe = 1; probe <= 4; ++probe) {
        std::vector<Rational> c(kJ);
        std::uint64_t s = probe * 0x9e3779b97f4a7c15ull;
        for (auto& x : c) {
            s ^= s >> 12;
            s ^= s << 25;
            s ^= s >> 27;
            x = Rational(static_cast<long>((s * 0x2545f4914f6cdd1dull >> 59)) - 15);
        }
        AlbertElement pt = AlbertElement::from_coords(c);
        AlbertElement img = AlbertElement::from_coords(m27.apply(c));
        if (alb_norm(img) != mu * alb_norm(pt)) return std::nullopt;
    }

    // T'(a,b,c) = sum M[p][a] M[q][b] M[r][c] T3(p,q,r), via three
    // contractions; compare against mu * T3.
    std::vector<Rational> u1(kJ * kJ * kJ);  // [q][r][a]
    for (std::size_t q = 0; q < kJ; ++q)
        for (std::size_t r = 0; r < kJ; ++r) {
            const auto& lst = T.t3_by_pair[q * kJ + r];
            if (lst.empty()) continue;
            for (const auto& [p, val] : lst)
                for (std::size_t a = 0; a < kJ; ++a) {
                    const Rational& mpa = M[a][p];
                    if (!mpa.is_zero()) u1[(q * kJ + r) * kJ + a] += val * mpa;
                }
        }
    std::vector<Rational> u2(kJ * kJ * kJ);  // [r][a][b]
    for (std::size_t q = 0; q < kJ; ++q)
        for (std::size_t r = 0; r < kJ; ++r)
            for (std::size_t a = 0; a < kJ; ++a) {
                const Rational& v = u1[(q * kJ + r) * kJ + a];
                if (v.is_zero()) continue;
                for (std::size_t b = 0; b < kJ; ++b) {
                    const Rational& mqb = M[b][q];
                    if (!mqb.is_zero()) u2[(r * kJ + a) * kJ + b] += v * mqb;
                }
            }
    std::vector<Rational> u3(kJ * kJ * kJ);  // [a][b][c]
    for (std::size_t r = 0; r < kJ; ++r)
        for (std::size_t a = 0; a < kJ; ++a)
            for (std::size_t b = 0; b < kJ; ++b) {
                const Rational& v = u2[(r * kJ + a) * kJ + b];
                if (v.is_zero()) continue;
                for (std::size_t c = 0; c < kJ; ++c) {
                    const Rational& mrc = M[c][r];
                    if (!mrc.is_zero()) u3[(a * kJ + b) * kJ + c] += v * mrc;
                }
            }
    std::vector<Rational> t3full(kJ * kJ * kJ);
    for (std::size_t b = 0; b < kJ; ++b)
        for (std::size_t c = 0; c < kJ; ++c)
            for (const auto& [a, val] : T.t3_by_pair[b * kJ + c]) t3full[(a * kJ + b) * kJ + c] = val;
    for (std::size_t i = 0; i < u3.size(); ++i)
        if (u3[i] != mu * t3full[i]) return std::nullopt;
    return mu;
}

std::optional<JordanSimilitude> lemma_similitude(const std::array<Rational, 3>& alpha,
                                                 const RelatedTripleCandidate& triple) {
    const OctonionSimilitude* ts[3] = {&triple.t0, &triple.t1, &triple.t2};
    Rational prod = alpha[0] * alpha[1] * alpha[2];
    for (std::size_t i = 0; i < 3; ++i) {
        if (alpha[i].is_zero())
            throw MultiplierMismatch("lemma_similitude: zero alpha");
        auto mu = oct_is_similitude(ts[i]->map);
        Rational required = prod / alpha[i];
        if (!mu || *mu != required || ts[i]->multiplier != required)
            throw MultiplierMismatch("lemma_similitude: slot " + std::to_string(i) +
                                     " multiplier does not match (a0 a1 a2)/a_i");
    }
    ExactMatrix m(kJ, kJ);
    for (std::size_t i = 0; i < 3; ++i) m.set(i, i, alpha[i]);
    for (std::size_t s = 0; s < 3; ++s)
        for (const auto& [k, v] : ts[s]->map.entries())
            m.set(3 + 8 * s + k.first, 3 + 8 * s + k.second, v);
    auto mu = is_jordan_similitude(m);
    if (!mu) return std::nullopt;
    return JordanSimilitude{std::move(m), *mu};
}

OctonionSimilitude moufang_word_map(const Octonion& u, int word, int length) {
    Octonion ub = oct_conj(u);
    ExactMatrix mats[4] = {left_mult_matrix(u), right_mult_matrix(u), left_mult_matrix(ub),
                           right_mult_matrix(ub)};
    ExactMatrix m = ExactMatrix::identity(8);
    for (int pos = length - 1; pos >= 0; --pos) {
        int letter = (word >> (2 * pos)) & 3;
        m = m * mats[letter];  // earlier letters apply first
    }
    Rational n = oct_norm(u);
    Rational mult(1);
    for (int i = 0; i < length; ++i) mult *= n;
    return OctonionSimilitude{std::move(m), std::move(mult)};
}

std::string moufang_word_name(int word, int length) {
    static const char* names[4] = {"Lu", "Ru", "Lc", "Rc"};
    std::string out;
    for (int pos = length - 1; pos >= 0; --pos) {
        if (!out.empty()) out += ".";
        out += names[(word >> (2 * pos)) & 3];
    }
    return out;
}

namespace {

/// Trilinear part of the cubic norm on the octonion slots; equals
/// tr((o0 o1) o2), checked against the norm in the test suite.
Rational trilin(const Octonion& a, const Octonion& b, const Octonion& c) {
    return oct_trace(oct_mul(oct_mul(a, b), c));
}

Octonion apply8(const ExactMatrix& m, const Octonion& x) {
    return Octonion::from_coords(m.apply(x.coords()));
}

}  // namespace

const MoufangSlots& moufang_slots() {
    static const MoufangSlots slots = [] {
        std::vector<Octonion> probes;
        {
            Octonion u1;
            u1.a = Rational(1);
            u1.v = {Rational(2), Rational(0), Rational(1)};
            u1.w = {Rational(0), Rational(1), Rational(-1)};
            u1.b = Rational(3);
            Octonion u2;
            u2.a = Rational(2);
            u2.v = {Rational(-1), Rational(1), Rational(0)};
            u2.w = {Rational(1), Rational(0), Rational(2)};
            u2.b = Rational(-1);
            probes = {u1, u2};
        }
        // random octonion triples for the cheap trilinear filter
        std::vector<std::array<Octonion, 3>> pts;
        std::uint64_t s = 0x9e3779b97f4a7c15ull;
        for (int k = 0; k < 3; ++k) {
            std::array<Octonion, 3> pt;
            for (auto& oc : pt) {
                std::vector<Rational> c(8);
                for (auto& x : c) {
                    s ^= s >> 12;
                    s ^= s << 25;
                    s ^= s >> 27;
                    x = Rational(static_cast<long>((s * 0x2545f4914f6cdd1dull) >> 61) - 3);
                }
                oc = Octonion::from_coords(c);
            }
            pts.push_back(pt);
        }

        struct ProbeTable {
            Rational m;  // n^4
            std::vector<std::array<Octonion, 3>> img0, img1, img2;  // per word, per point
            std::vector<Rational> rhs;                              // m * trilin(pt)
        };
        std::vector<ProbeTable> tables;
        for (const auto& u : probes) {
            ProbeTable tab;
            Rational n = oct_norm(u);
            tab.m = n * n * n * n;
            for (int w = 0; w < 16; ++w) {
                auto m0 = moufang_word_map(u, w, 2).map;
                tab.img0.push_back({apply8(m0, pts[0][0]), apply8(m0, pts[1][0]),
                                    apply8(m0, pts[2][0])});
            }
            for (int w = 0; w < 64; ++w) {
                auto m1 = moufang_word_map(u, w, 3).map;
                tab.img1.push_back({apply8(m1, pts[0][1]), apply8(m1, pts[1][1]),
                                    apply8(m1, pts[2][1])});
                tab.img2.push_back({apply8(m1, pts[0][2]), apply8(m1, pts[1][2]),
                                    apply8(m1, pts[2][2])});
            }
            for (const auto& pt : pts) tab.rhs.push_back(tab.m * trilin(pt[0], pt[1], pt[2]));
            tables.push_back(std::move(tab));
        }

        auto trilinear_ok = [&](int w0, int w1, int w2) {
            for (const auto& tab : tables)
                for (std::size_t k = 0; k < pts.size(); ++k)
                    if (trilin(tab.img0[w0][k], tab.img1[w1][k], tab.img2[w2][k]) != tab.rhs[k])
                        return false;
            return true;
        };

        auto full_ok = [&probes](const MoufangSlots& cand) {
            for (const auto& u : probes) {
                Rational n = oct_norm(u);
                std::array<Rational, 3> alpha{n * n, n, n};
                RelatedTripleCandidate t{moufang_word_map(u, cand.word[0], 2),
                                         moufang_word_map(u, cand.word[1], 3),
                                         moufang_word_map(u, cand.word[2], 3)};
                try {
                    if (!lemma_similitude(alpha, t)) return false;
                } catch (const MultiplierMismatch&) {
                    return false;
                }
            }
            return true;
        };

        for (int w0 = 0; w0 < 16; ++w0)
            for (int w1 = 0; w1 < 64; ++w1)
                for (int w2 = 0; w2 < 64; ++w2) {
                    if (!trilinear_ok(w0, w1, w2)) continue;
                    MoufangSlots cand{{w0, w1, w2}};
                    if (full_ok(cand)) return cand;
                }
        throw std::logic_error("moufang_slots: no slot assignment passes the predicate");
    }();
    return slots;
}

RelatedTripleCandidate moufang_triple(const Octonion& u) {
    if (oct_norm(u).is_zero())
        throw std::invalid_argument("moufang_triple: u must be invertible");
    const auto& slots = moufang_slots();
    return RelatedTripleCandidate{moufang_word_map(u, slots.word[0], 2),
                                  moufang_word_map(u, slots.word[1], 3),
                                  moufang_word_map(u, slots.word[2], 3)};
}

std::array<Rational, 3> moufang_alphas(const Octonion& u) {
    Rational n = oct_norm(u);
    return {n * n, n, n};
}

namespace {

std::vector<ZRow> derivation_rows() {
    const auto& T = jordan_tensors();
    std::vector<ZRow> rows;
    rows.reserve(kJ * (kJ + 1) / 2 * kJ);
    std::map<std::uint32_t, Rational> acc;
    for (std::size_t a = 0; a < kJ; ++a)
        for (std::size_t b = a; b < kJ; ++b) {
            for (std::size_t c = 0; c < kJ; ++c) {
                // D(e_a ∘ e_b)_c - (D(e_a) ∘ e_b)_c - (e_a ∘ D(e_b))_c = 0
                for (const auto& [t, v] : T.product[a][b]) acc[mcol(c, t)] += v;
                for (std::size_t t = 0; t < kJ; ++t) {
                    for (const auto& [cc, v] : T.product[t][b])
                        if (cc == c) acc[mcol(t, a)] -= v;
                    for (const auto& [cc, v] : T.product[a][t])
                        if (cc == c) acc[mcol(t, b)] -= v;
                }
                rows.push_back(take_row(acc));
            }
        }
    return rows;
}

std::vector<ZRow> similitude_rows() {
    const auto& T = jordan_tensors();
    std::vector<ZRow> rows;
    std::map<std::uint32_t, Rational> acc;
    for (std::size_t a = 0; a < kJ; ++a)
        for (std::size_t b = a; b < kJ; ++b)
            for (std::size_t c = b; c < kJ; ++c) {
                for (const auto& [p, v] : T.t3_by_pair[b * kJ + c]) acc[mcol(p, a)] += v;
                for (const auto& [p, v] : T.t3_by_pair[a * kJ + c]) acc[mcol(p, b)] += v;
                for (const auto& [p, v] : T.t3_by_pair[a * kJ + b]) acc[mcol(p, c)] += v;
                // - lambda * T3(a,b,c)
                for (const auto& [p, v] : T.t3_by_pair[b * kJ + c])
                    if (p == a) acc[kLambdaCol] -= v;
                rows.push_back(take_row(acc));
            }
    return rows;
}

KernelBasis solve_rows(const std::vector<ZRow>& rows, std::uint32_t width,
                       const LieOptions& opts, bool sampled) {
    auto src = make_row_source(rows, width);
    KernelBasis out;
    out.ambient_dim = width;
    if (opts.strategy == KernelStrategy::FractionFree) {
        auto res = exact_kernel(src);
        out.vectors = std::move(res.basis);
        out.certification = Certification::ExactlyVerified;
    } else {
        ModularOptions mo;
        mo.prime_budget = opts.prime_budget;
        mo.seed = opts.seed;
        mo.threads = opts.threads;
        mo.sampled = sampled;
        auto res = modular_kernel(src, mo);
        out.vectors = std::move(res.basis);
        out.primes = std::move(res.primes);
        out.certification = Certification::ExactlyVerified;
    }
    return out;
}

/// Extends kernel vectors of the 729-dim derivation system into the
/// 730-dim similitude ambient with multiplier 0.
KernelBasis extend_with_zero_lambda(KernelBasis kb) {
    for (auto& v : kb.vectors) v.emplace_back(0);
    kb.ambient_dim += 1;
    return kb;
}

}  // namespace

LieSubalgebraReport derivation_algebra(const LieOptions& opts) {
    auto rows = derivation_rows();
    LieSubalgebraReport rep;
    rep.name = "der-j";
    rep.ambient = LieAmbient::EndJPlusMultiplier;
    rep.basis = extend_with_zero_lambda(solve_rows(rows, kMapDim, opts, true));
    return rep;
}

LieSubalgebraReport similitude_algebra(const LieOptions& opts) {
    auto rows = similitude_rows();
    LieSubalgebraReport rep;
    rep.name = "sim-j";
    rep.ambient = LieAmbient::EndJPlusMultiplier;
    rep.basis = solve_rows(rows, kMapDim + 1, opts, true);
    return rep;
}

LieSubalgebraReport restrict_subspace(
    const std::string& name, const LieSubalgebraReport& parent,
    const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& conditions) {
    std::size_t k = parent.dimension();
    if (k == 0 || conditions.empty())
        throw std::invalid_argument("restrict_subspace: degenerate input");
    ExactMatrix a(conditions.size(), k);
    for (std::size_t r = 0; r < conditions.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) {
            Rational dot;
            for (const auto& [c, v] : conditions[r]) dot += v * parent.basis.vectors[j][c];
            a.set(r, j, dot);
        }
    auto coefs = kernel(a);
    LieSubalgebraReport rep;
    rep.name = name;
    rep.ambient = parent.ambient;
    rep.basis.ambient_dim = parent.basis.ambient_dim;
    rep.basis.certification = parent.basis.certification;
    rep.basis.primes = parent.basis.primes;
    for (const auto& co : coefs.vectors) {
        std::vector<Rational> v(parent.basis.ambient_dim);
        for (std::size_t j = 0; j < k; ++j) {
            if (co[j].is_zero()) continue;
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] += co[j] * parent.basis.vectors[j][c];
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        rep.basis.vectors.push_back(normalize_primitive(std::move(v), lead));
    }
    return rep;
}

bool subspace_contained(const std::vector<std::vector<Rational>>& a,
                        const std::vector<std::vector<Rational>>& b) {
    if (a.empty()) return true;
    std::uint32_t width = static_cast<std::uint32_t>(a.front().size());
    ExactRref rr(width);
    auto to_zrow = [](const std::vector<Rational>& v) {
        Int den(1);
        for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
        ZRow row;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero())
                row.nz.emplace_back(static_cast<std::uint32_t>(c),
                                    Int(v[c].num() * (den / v[c].den())));
        return row;
    };
    for (const auto& v : b) rr.insert(to_zrow(v));
    for (const auto& v : a)
        if (rr.insert(to_zrow(v))) return false;
    return true;
}

StabilizerTable stabilizer_dimensions(const LieSubalgebraReport& der,
                                      const LieSubalgebraReport& sim) {
    using Cond = std::vector<std::pair<std::uint32_t, Rational>>;
    std::vector<Cond> offdiag, offline, kill_one;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < kJ; ++c) {
            if (c >= 3) offdiag.push_back({{mcol(c, i), Rational(1)}});
            if (c != i) offline.push_back({{mcol(c, i), Rational(1)}});
        }
    for (std::size_t c = 0; c < kJ; ++c)
        kill_one.push_back(
            {{mcol(c, 0), Rational(1)}, {mcol(c, 1), Rational(1)}, {mcol(c, 2), Rational(1)}});

    StabilizerTable table;
    table.stab_diag = restrict_subspace("stab-l", sim, offdiag);
    table.stab_lines = restrict_subspace("stab-lines", sim, offline);
    table.aut_lv = restrict_subspace("aut-lv", der, offdiag);
    table.stab_one = restrict_subspace("stab-1", sim, kill_one);
    table.stab_diag_equals_stab_lines =
        table.stab_diag.dimension() == table.stab_lines.dimension() &&
        subspace_contained(table.stab_lines.basis.vectors, table.stab_diag.basis.vectors);
    table.stab_one_equals_derivations =
        table.stab_one.dimension() == der.dimension() &&
        subspace_contained(table.stab_one.basis.vectors, der.basis.vectors) &&
        subspace_contained(der.basis.vectors, table.stab_one.basis.vectors);
    return table;
}

CubicSubalgebra cubic_subalgebra_from_regular(const AlbertElement& x) {
    std::vector<AlbertElement> gens{AlbertElement::unit(), x, jordan_mul_fast(x, x)};
    ExactRref rr(kJ);
    CubicSubalgebra out;
    for (const auto& g : gens) {
        ZRow row;
        Int den(1);
        auto coords = g.coords();
        for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        for (std::size_t c = 0; c < kJ; ++c)
            if (!coords[c].is_zero())
                row.nz.emplace_back(static_cast<std::uint32_t>(c),
                                    Int(coords[c].num() * (den / coords[c].den())));
        if (rr.insert(row)) out.basis.push_back(g);
    }
    out.dimension = rr.rank();
    out.regular = out.dimension == 3;
    return out;
}

std::string lie_report_json(const LieSubalgebraReport& report, bool include_basis) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    j["ambient"] = report.ambient == LieAmbient::EndJPlusMultiplier ? "end-j-plus-multiplier"
                                                                    : "end-b-plus-multiplier";
    j["dimension"] = report.dimension();
    j["certification"] = report.basis.certification == Certification::ExactlyVerified
                             ? "exactly-verified"
                             : "modular-only";
    auto primes = nlohmann::ordered_json::array();
    for (auto p : report.basis.primes) primes.push_back(p);
    j["primes"] = std::move(primes);
    if (include_basis) {
        auto basis = nlohmann::ordered_json::array();
        for (const auto& v : report.basis.vectors) {
            auto vec = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) vec.push_back({c, v[c].to_pair_string()});
            basis.push_back(std::move(vec));
        }
        j["basis"] = std::move(basis);
    }
    return j.dump();
}

}  // namespace exalg
