#include "core/linsolve.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <random>

namespace exalg {

RowSource make_row_source(const std::vector<ZRow>& rows, std::uint32_t width) {
    RowSource src;
    src.width = width;
    src.count = rows.size();
    src.fetch_mod = [&rows](std::size_t i, std::uint64_t p, FpRow& out) {
        out.clear();
        for (const auto& [c, z] : rows[i].nz) {
            std::uint64_t r = mod_p(z, p);
            if (r) out.emplace_back(c, r);
        }
    };
    src.fetch_exact = [&rows](std::size_t i, ZRow& out) { out = rows[i]; };
    return src;
}

// ---------------------------------------------------------------------------
// ExactRref

ExactRref::ExactRref(std::uint32_t width) : width_(width), col2row_(width, -1) {}

void ExactRref::axpy(std::vector<std::pair<std::uint32_t, Rational>>& target,
                     const Rational& coef, const Row& prow) {
    // target <- target - coef * prow
    std::vector<std::pair<std::uint32_t, Rational>> out;
    out.reserve(target.size() + prow.nz.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < prow.nz.size()) {
        if (j == prow.nz.size() || (i < target.size() && target[i].first < prow.nz[j].first)) {
            out.push_back(std::move(target[i]));
            ++i;
        } else if (i == target.size() || prow.nz[j].first < target[i].first) {
            out.emplace_back(prow.nz[j].first, -(coef * prow.nz[j].second));
            ++j;
        } else {
            Rational v = target[i].second - coef * prow.nz[j].second;
            if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

bool ExactRref::insert(const ZRow& row) {
    std::vector<std::pair<std::uint32_t, Rational>> nz;
    nz.reserve(row.nz.size());
    for (const auto& [c, v] : row.nz)
        if (sgn(v) != 0) nz.emplace_back(c, Rational(v));
    if (nz.empty()) return false;

    // Pivot rows carry no entries in other pivot columns, so a single pass
    // over the pivot hits is complete: eliminations only touch free columns.
    std::vector<std::pair<std::int32_t, Rational>> hits;
    for (const auto& [c, v] : nz)
        if (col2row_[c] >= 0) hits.emplace_back(col2row_[c], v);
    for (const auto& [ri, coef] : hits) axpy(nz, coef, rows_[ri]);
    if (nz.empty()) return false;

    std::uint32_t pivot = nz.front().first;
    std::size_t best_bits = SIZE_MAX;
    for (const auto& [c, v] : nz) {
        std::size_t bits = mpz_sizeinbase(v.num().get_mpz_t(), 2) +
                           mpz_sizeinbase(v.den().get_mpz_t(), 2);
        if (bits < best_bits) { best_bits = bits; pivot = c; }
    }
    Rational pv;
    for (const auto& [c, v] : nz)
        if (c == pivot) { pv = v; break; }
    for (auto& [c, v] : nz) v /= pv;

    Row newrow{pivot, std::move(nz)};
    for (auto& existing : rows_) {
        auto it = std::lower_bound(existing.nz.begin(), existing.nz.end(), pivot,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it != existing.nz.end() && it->first == pivot) {
            Rational coef = it->second;
            axpy(existing.nz, coef, newrow);
        }
    }
    col2row_[pivot] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(newrow));
    return true;
}

std::vector<std::uint32_t> ExactRref::pivot_cols_sorted() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < width_; ++c)
        if (col2row_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::uint32_t> ExactRref::free_cols_sorted() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < width_; ++c)
        if (col2row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<std::vector<Rational>> ExactRref::kernel_basis() const {
    std::vector<std::vector<Rational>> basis;
    for (std::uint32_t f : free_cols_sorted()) {
        std::vector<Rational> v(width_);
        v[f] = Rational(1);
        for (const auto& row : rows_) {
            auto it = std::lower_bound(row.nz.begin(), row.nz.end(), f,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != row.nz.end() && it->first == f) v[row.pivot] = -it->second;
        }
        basis.push_back(normalize_primitive(std::move(v), f));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// FpRref

FpRref::FpRref(std::uint32_t width, std::uint64_t p)
    : width_(width), p_(p), col2row_(width, -1), scratch_(width, 0) {}

bool FpRref::insert(const FpRow& row) {
    touched_.clear();
    for (const auto& [c, v] : row) {
        std::uint64_t r = v % p_;
        if (r == 0) continue;
        if (scratch_[c] == 0) touched_.push_back(c);
        scratch_[c] = fp::add(scratch_[c], r, p_);
    }
    std::vector<std::uint32_t> hits;
    for (std::uint32_t c : touched_)
        if (col2row_[c] >= 0 && scratch_[c]) hits.push_back(c);
    for (std::uint32_t c : hits) {
        std::uint64_t val = scratch_[c];
        if (!val) continue;
        const Row& prow = rows_[col2row_[c]];
        for (const auto& [cc, vv] : prow.nz) {
            std::uint64_t delta = fp::mul(val, vv, p_);
            if (scratch_[cc] == 0 && delta) touched_.push_back(cc);
            scratch_[cc] = fp::sub(scratch_[cc], delta, p_);
        }
    }
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    FpRow nz;
    for (std::uint32_t c : touched_) {
        if (scratch_[c]) nz.emplace_back(c, scratch_[c]);
        scratch_[c] = 0;
    }
    if (nz.empty()) return false;

    std::uint32_t pivot = nz.front().first;
    std::uint64_t inv = fp::inv(nz.front().second, p_);
    for (auto& [c, v] : nz) v = fp::mul(v, inv, p_);

    Row newrow{pivot, std::move(nz)};
    for (auto& existing : rows_) {
        auto it = std::lower_bound(existing.nz.begin(), existing.nz.end(), pivot,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it == existing.nz.end() || it->first != pivot) continue;
        std::uint64_t coef = it->second;
        FpRow merged;
        merged.reserve(existing.nz.size() + newrow.nz.size());
        std::size_t i = 0, j = 0;
        while (i < existing.nz.size() || j < newrow.nz.size()) {
            if (j == newrow.nz.size() ||
                (i < existing.nz.size() && existing.nz[i].first < newrow.nz[j].first)) {
                merged.push_back(existing.nz[i++]);
            } else if (i == existing.nz.size() || newrow.nz[j].first < existing.nz[i].first) {
                std::uint64_t v = fp::neg(fp::mul(coef, newrow.nz[j].second, p_), p_);
                if (v) merged.emplace_back(newrow.nz[j].first, v);
                ++j;
            } else {
                std::uint64_t v =
                    fp::sub(existing.nz[i].second, fp::mul(coef, newrow.nz[j].second, p_), p_);
                if (v) merged.emplace_back(existing.nz[i].first, v);
                ++i;
                ++j;
            }
        }
        existing.nz = std::move(merged);
    }
    col2row_[pivot] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(newrow));
    return true;
}

std::vector<std::uint32_t> FpRref::pivot_cols_sorted() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < width_; ++c)
        if (col2row_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::uint32_t> FpRref::free_cols_sorted() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < width_; ++c)
        if (col2row_[c] < 0) out.push_back(c);
    return out;
}

std::vector<FpRow> FpRref::kernel_basis() const {
    std::vector<FpRow> basis;
    for (std::uint32_t f : free_cols_sorted()) {
        FpRow v;
        v.emplace_back(f, 1);
        for (const auto& row : rows_) {
            auto it = std::lower_bound(row.nz.begin(), row.nz.end(), f,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it != row.nz.end() && it->first == f)
                v.emplace_back(row.pivot, fp::neg(it->second, p_));
        }
        std::sort(v.begin(), v.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// drivers

namespace {

struct PrimeRun {
    std::uint64_t p = 0;
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivots;
    std::vector<FpRow> kernel;
};

std::vector<std::size_t> sampled_order(std::size_t count, std::uint64_t seed, std::uint64_t p) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + p);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

/// Checks every row against the kernel basis mod p; returns indices of
/// violated rows (capped).
std::vector<std::size_t> violations_mod_p(const RowSource& src, std::uint64_t p,
                                          const std::vector<FpRow>& kernel, std::size_t cap) {
    std::vector<std::vector<std::uint64_t>> dense(kernel.size(),
                                                  std::vector<std::uint64_t>(src.width, 0));
    for (std::size_t d = 0; d < kernel.size(); ++d)
        for (const auto& [c, v] : kernel[d]) dense[d][c] = v;
    std::vector<std::size_t> bad;
    FpRow row;
    std::vector<std::uint64_t> acc(kernel.size());
    for (std::size_t i = 0; i < src.count && bad.size() < cap; ++i) {
        src.fetch_mod(i, p, row);
        if (row.empty()) continue;
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [c, v] : row)
            for (std::size_t d = 0; d < dense.size(); ++d)
                acc[d] = (acc[d] + v * dense[d][c]) % p;
        for (std::size_t d = 0; d < acc.size(); ++d)
            if (acc[d]) { bad.push_back(i); break; }
    }
    return bad;
}

PrimeRun run_prime(const RowSource& src, std::uint64_t p, const ModularOptions& opts) {
    FpRref rr(src.width, p);
    FpRow row;
    if (!opts.sampled) {
        for (std::size_t i = 0; i < src.count; ++i) {
            src.fetch_mod(i, p, row);
            rr.insert(row);
        }
    } else {
        auto order = sampled_order(src.count, opts.seed, p);
        int stall = 0;
        for (std::size_t idx : order) {
            src.fetch_mod(idx, p, row);
            stall = rr.insert(row) ? 0 : stall + 1;
            if (stall >= opts.sample_stall) break;
        }
        for (;;) {
            auto kb = rr.kernel_basis();
            if (kb.empty()) break;
            auto bad = violations_mod_p(src, p, kb, 1024);
            if (bad.empty()) break;
            for (std::size_t i : bad) {
                src.fetch_mod(i, p, row);
                rr.insert(row);
            }
        }
    }
    PrimeRun out;
    out.p = p;
    out.rank = rr.rank();
    out.pivots = rr.pivot_cols_sorted();
    out.kernel = rr.kernel_basis();
    return out;
}

/// CRT + rational reconstruction of the canonical kernel across agreeing
/// primes. Returns nullopt when some entry fails to reconstruct.
std::optional<std::vector<std::vector<Rational>>> lift_basis(
    const std::vector<const PrimeRun*>& runs, std::uint32_t width,
    const std::vector<std::uint32_t>& free_cols) {
    std::vector<std::uint64_t> moduli;
    for (const auto* r : runs) moduli.push_back(r->p);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t vi = 0; vi < free_cols.size(); ++vi) {
        // union of support across primes
        std::map<std::uint32_t, std::vector<std::uint64_t>> entries;
        for (std::size_t ri = 0; ri < runs.size(); ++ri) {
            for (const auto& [c, v] : runs[ri]->kernel[vi]) {
                auto& res = entries[c];
                res.resize(runs.size(), 0);
                res[ri] = v;
            }
        }
        for (auto& [c, res] : entries) res.resize(runs.size(), 0);
        std::vector<Rational> v(width);
        for (const auto& [c, res] : entries) {
            Int combined = crt(res, moduli);
            Int m = 1;
            for (std::uint64_t p : moduli) m *= Int(static_cast<unsigned long>(p));
            auto rec = rational_reconstruct(combined, m);
            if (!rec) return std::nullopt;
            v[c] = *rec;
        }
        basis.push_back(normalize_primitive(std::move(v), free_cols[vi]));
    }
    return basis;
}

bool certify_exact(const RowSource& src, const std::vector<std::vector<Rational>>& basis) {
    if (basis.empty()) return true;
    std::vector<std::vector<Int>> nums(basis.size());
    for (std::size_t d = 0; d < basis.size(); ++d) {
        nums[d].reserve(basis[d].size());
        for (const auto& r : basis[d]) {
            if (!r.is_integer())
                throw std::logic_error("certify_exact: basis vector not integer-normalized");
            nums[d].push_back(r.num());
        }
    }
    ZRow row;
    std::vector<Int> acc(basis.size());
    for (std::size_t i = 0; i < src.count; ++i) {
        src.fetch_exact(i, row);
        for (auto& a : acc) a = 0;
        for (const auto& [c, coef] : row.nz)
            for (std::size_t d = 0; d < nums.size(); ++d)
                if (sgn(nums[d][c]) != 0) acc[d] += coef * nums[d][c];
        for (const auto& a : acc)
            if (sgn(a) != 0) return false;
    }
    return true;
}

}  // namespace

SolveResult exact_kernel(const RowSource& src) {
    ExactRref rr(src.width);
    ZRow row;
    for (std::size_t i = 0; i < src.count; ++i) {
        src.fetch_exact(i, row);
        rr.insert(row);
    }
    SolveResult out;
    out.ambient = src.width;
    out.basis = rr.kernel_basis();
    if (!certify_exact(src, out.basis))
        throw std::logic_error("exact_kernel: basis failed substitution check");
    out.certified = true;
    return out;
}

std::size_t rank_mod_p(const RowSource& src, std::uint64_t p) {
    FpRref rr(src.width, p);
    FpRow row;
    for (std::size_t i = 0; i < src.count; ++i) {
        src.fetch_mod(i, p, row);
        rr.insert(row);
    }
    return rr.rank();
}

std::optional<std::size_t> probe_kernel_dim(const RowSource& src, std::uint64_t p,
                                            std::size_t max_rank, std::uint64_t seed) {
    FpRref rr(src.width, p);
    FpRow row;
    auto order = sampled_order(src.count, seed, p);
    int stall = 0;
    for (std::size_t idx : order) {
        src.fetch_mod(idx, p, row);
        stall = rr.insert(row) ? 0 : stall + 1;
        if (rr.rank() > max_rank) return std::nullopt;
        if (stall >= 128) break;
    }
    for (;;) {
        auto kb = rr.kernel_basis();
        if (kb.empty()) break;
        auto bad = violations_mod_p(src, p, kb, 1024);
        if (bad.empty()) break;
        for (std::size_t i : bad) {
            src.fetch_mod(i, p, row);
            rr.insert(row);
            if (rr.rank() > max_rank) return std::nullopt;
        }
    }
    return src.width - rr.rank();
}

SolveResult modular_kernel(const RowSource& src, const ModularOptions& opts) {
    PrimeSource ps(opts.seed);
    std::vector<PrimeRun> runs;
    int drawn = 0;

    auto draw = [&](int n) {
        std::vector<std::uint64_t> primes;
        for (int i = 0; i < n; ++i) primes.push_back(ps.next());
        drawn += n;
        if (opts.threads > 1 && n > 1) {
            std::vector<std::future<PrimeRun>> futs;
            for (std::uint64_t p : primes)
                futs.push_back(std::async(std::launch::async,
                                          [&src, p, &opts] { return run_prime(src, p, opts); }));
            for (auto& f : futs) runs.push_back(f.get());
        } else {
            for (std::uint64_t p : primes) runs.push_back(run_prime(src, p, opts));
        }
    };

    draw(std::min(2, opts.prime_budget));

    for (;;) {
        // Consensus: at least two primes with identical pivot structure.
        std::vector<const PrimeRun*> agreeing;
        for (std::size_t i = 0; i < runs.size() && agreeing.empty(); ++i) {
            std::vector<const PrimeRun*> group{&runs[i]};
            for (std::size_t j = i + 1; j < runs.size(); ++j)
                if (runs[j].pivots == runs[i].pivots) group.push_back(&runs[j]);
            if (group.size() >= 2) agreeing = std::move(group);
        }
        if (agreeing.empty()) {
            if (drawn >= opts.prime_budget)
                throw ReconstructionFailure(
                    "modular_kernel: primes disagree on echelon structure within prime budget");
            draw(1);
            continue;
        }

        std::vector<std::uint32_t> free_cols;
        {
            std::vector<bool> piv(src.width, false);
            for (std::uint32_t c : agreeing[0]->pivots) piv[c] = true;
            for (std::uint32_t c = 0; c < src.width; ++c)
                if (!piv[c]) free_cols.push_back(c);
        }

        auto lifted = lift_basis(agreeing, src.width, free_cols);
        if (!lifted) {
            if (drawn >= opts.prime_budget)
                throw ReconstructionFailure(
                    "modular_kernel: rational reconstruction failed; raise the prime budget");
            draw(1);
            continue;
        }
        if (opts.certify && !certify_exact(src, *lifted)) {
            if (drawn >= opts.prime_budget)
                throw ReconstructionFailure(
                    "modular_kernel: exact certification failed; raise the prime budget");
            draw(1);
            continue;
        }

        SolveResult out;
        out.ambient = src.width;
        out.basis = std::move(*lifted);
        for (const auto* r : agreeing) out.primes.push_back(r->p);
        out.certified = opts.certify;
        return out;
    }
}

std::vector<Rational> normalize_primitive(std::vector<Rational> v, std::size_t sign_col) {
    Int l = 1;
    for (const auto& r : v)
        if (!r.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    Int g = 0;
    std::vector<Int> nums(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        nums[i] = v[i].num() * (l / v[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
    }
    if (sgn(g) == 0) return v;  // zero vector
    int flip = sgn(nums[sign_col]) < 0 ? -1 : 1;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(Int(flip * nums[i] / g));
    return v;
}

}  // namespace exalg
