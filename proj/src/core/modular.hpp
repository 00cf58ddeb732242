#ifndef EXALG_MODULAR_HPP
#define EXALG_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace exalg {

namespace fp {

// All primes used are 31-bit, so products of residues fit in a u64.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a ? p - a : 0; }

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace fp

bool is_prime_u64(std::uint64_t n);

/// Deterministic stream of distinct 31-bit primes (> 2^30), reproducible
/// from the seed. Used by the multi-modular solvers.
class PrimeSource {
  public:
    explicit PrimeSource(std::uint64_t seed);
    std::uint64_t next();

  private:
    std::uint64_t state_;
    std::vector<std::uint64_t> issued_;
};

/// Chinese remainder combination of residues modulo pairwise-coprime moduli.
Int crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli);

/// Rational reconstruction of a (mod m): finds n/d with |n|, d <= sqrt(m/2)
/// and n = a*d (mod m). Returns nullopt if no such fraction exists.
std::optional<Rational> rational_reconstruct(const Int& a, const Int& m);

}  // namespace exalg

#endif
