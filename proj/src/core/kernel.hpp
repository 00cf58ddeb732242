#ifndef EXALG_KERNEL_HPP
#define EXALG_KERNEL_HPP

#include <cstdint>
#include <vector>

#include "core/linsolve.hpp"
#include "core/matrix.hpp"

namespace exalg {

enum class KernelStrategy { FractionFree, MultiModular };
enum class Certification { ExactlyVerified, ModularOnly };

struct KernelBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rational>> vectors;
    Certification certification = Certification::ExactlyVerified;
    std::vector<std::uint64_t> primes;
    std::size_t dimension() const { return vectors.size(); }
};

struct KernelOptions {
    KernelStrategy strategy = KernelStrategy::FractionFree;
    int prime_budget = 4;
    std::uint64_t seed = 0;
    int threads = 1;
    bool certify = true;
    /// Fraction-free elimination is refused above this unknown count; the
    /// multi-modular path is mandatory there.
    std::size_t fraction_free_limit = 2000;
};

/// Basis of the right null space of the system.
KernelBasis kernel(const ExactMatrix& system, const KernelOptions& opts = {});

/// Rank over the rationals (fraction-free).
std::size_t rank(const ExactMatrix& system);

/// Clears denominators row by row, producing integer equation rows.
std::vector<ZRow> to_integer_rows(const ExactMatrix& system);

}  // namespace exalg

#endif
