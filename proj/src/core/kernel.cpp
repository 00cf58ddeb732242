#include "core/kernel.hpp"

#include <stdexcept>

namespace exalg {

std::vector<ZRow> to_integer_rows(const ExactMatrix& system) {
    std::vector<ZRow> rows(system.rows());
    std::vector<Int> lcm(system.rows(), Int(1));
    for (const auto& [k, v] : system.entries())
        mpz_lcm(lcm[k.first].get_mpz_t(), lcm[k.first].get_mpz_t(), v.den().get_mpz_t());
    for (const auto& [k, v] : system.entries())
        rows[k.first].nz.emplace_back(k.second, Int(v.num() * (lcm[k.first] / v.den())));
    return rows;
}

KernelBasis kernel(const ExactMatrix& system, const KernelOptions& opts) {
    if (system.rows() == 0 || system.cols() == 0)
        throw std::invalid_argument("kernel: system must have at least one row and one column");
    auto rows = to_integer_rows(system);
    auto src = make_row_source(rows, static_cast<std::uint32_t>(system.cols()));

    KernelBasis out;
    out.ambient_dim = system.cols();
    if (opts.strategy == KernelStrategy::FractionFree) {
        if (system.cols() > opts.fraction_free_limit)
            throw std::invalid_argument(
                "kernel: system exceeds the fraction-free unknown limit; use MultiModular");
        auto res = exact_kernel(src);
        out.vectors = std::move(res.basis);
        out.certification = Certification::ExactlyVerified;
    } else {
        ModularOptions mo;
        mo.prime_budget = opts.prime_budget;
        mo.seed = opts.seed;
        mo.threads = opts.threads;
        mo.certify = opts.certify;
        auto res = modular_kernel(src, mo);
        out.vectors = std::move(res.basis);
        out.primes = std::move(res.primes);
        out.certification =
            res.certified ? Certification::ExactlyVerified : Certification::ModularOnly;
    }
    return out;
}

std::size_t rank(const ExactMatrix& system) {
    auto rows = to_integer_rows(system);
    ExactRref rr(static_cast<std::uint32_t>(system.cols()));
    for (const auto& r : rows) rr.insert(r);
    return rr.rank();
}

}  // namespace exalg
