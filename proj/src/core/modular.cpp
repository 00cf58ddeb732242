#include "core/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace exalg {

namespace fp {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("fp::inv of zero");
    return pow(a, p - 2, p);
}

}  // namespace fp

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for n < 3.3e24 with the first 12 prime bases.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = fp::pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = fp::mul(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

PrimeSource::PrimeSource(std::uint64_t seed) : state_(seed * 6364136223846793005ull + 1442695040888963407ull) {}

std::uint64_t PrimeSource::next() {
    for (;;) {
        // splitmix64 step; candidates are odd 31-bit numbers above 2^30
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        std::uint64_t cand = (1ull << 30) + (z % (1ull << 30));
        cand |= 1;
        if (!is_prime_u64(cand)) continue;
        if (std::find(issued_.begin(), issued_.end(), cand) != issued_.end()) continue;
        issued_.push_back(cand);
        return cand;
    }
}

Int crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw std::invalid_argument("crt: size mismatch");
    Int x(static_cast<unsigned long>(residues[0]));
    Int m(static_cast<unsigned long>(moduli[0]));
    for (std::size_t i = 1; i < residues.size(); ++i) {
        Int p(static_cast<unsigned long>(moduli[i]));
        // x' = x + m * ((r - x) * m^-1 mod p)
        std::uint64_t xi = mod_p(x, moduli[i]);
        std::uint64_t delta = fp::sub(residues[i] % moduli[i], xi, moduli[i]);
        std::uint64_t minv = fp::inv(mod_p(m, moduli[i]), moduli[i]);
        std::uint64_t k = fp::mul(delta, minv, moduli[i]);
        x += m * Int(static_cast<unsigned long>(k));
        m *= p;
    }
    return x;
}

std::optional<Rational> rational_reconstruct(const Int& a, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (sgn(t1) == 0) return std::nullopt;
    Int den = t1 < 0 ? Int(-t1) : t1;
    Int num = t1 < 0 ? Int(-r1) : r1;
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        // Candidate not in lowest terms never satisfies the uniqueness bound.
        num /= g;
        den /= g;
    }
    // Verify num = a * den (mod m).
    Int check = (a * den - num) % m;
    if (sgn(check) != 0) return std::nullopt;
    return Rational(num, den);
}

}  // namespace exalg
