#ifndef EXALG_LINSOLVE_HPP
#define EXALG_LINSOLVE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "core/modular.hpp"
#include "core/rational.hpp"

namespace exalg {

using FpRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

/// Sparse homogeneous equation row with exact integer coefficients,
/// sorted by column.
struct ZRow {
    std::vector<std::pair<std::uint32_t, Int>> nz;
};

/// Row provider for solvers that stream equations (the biggest systems are
/// produced on the fly and never materialized as an ExactMatrix).
struct RowSource {
    std::uint32_t width = 0;
    std::size_t count = 0;
    std::function<void(std::size_t, std::uint64_t, FpRow&)> fetch_mod;
    std::function<void(std::size_t, ZRow&)> fetch_exact;
};

RowSource make_row_source(const std::vector<ZRow>& rows, std::uint32_t width);

/// Thrown when the multi-modular path exhausts its prime budget without
/// producing an exactly certified result.
struct ReconstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incremental exact reduced echelon form over Q.
///
/// Pivot rows are normalized to pivot value 1 and kept mutually reduced, so
/// every stored entry is a ratio of minors of the input rows; mpq
/// canonicalization keeps those ratios in lowest terms, which bounds
/// coefficient growth on dense input and collapses it on the structured
/// systems this library produces. Pivots are chosen by minimal combined
/// numerator/denominator bit length (ties by column). The reduced invariant
/// — no row carries an entry in another row's pivot column — makes kernel
/// extraction order-free.
class ExactRref {
  public:
    explicit ExactRref(std::uint32_t width);

    /// Reduces the row and registers it as a pivot row when nonzero.
    /// Returns true if the rank grew.
    bool insert(const ZRow& row);

    std::size_t rank() const { return rows_.size(); }
    std::uint32_t width() const { return width_; }
    std::vector<std::uint32_t> pivot_cols_sorted() const;
    std::vector<std::uint32_t> free_cols_sorted() const;

    /// Canonical kernel basis: one vector per free column (ascending), with
    /// value 1 in its free column, normalized to a primitive integer vector.
    std::vector<std::vector<Rational>> kernel_basis() const;

  private:
    struct Row {
        std::uint32_t pivot;
        std::vector<std::pair<std::uint32_t, Rational>> nz;  // pivot entry is 1
    };
    static void axpy(std::vector<std::pair<std::uint32_t, Rational>>& target,
                     const Rational& coef, const Row& pivot_row);

    std::uint32_t width_;
    std::vector<Row> rows_;
    std::vector<std::int32_t> col2row_;
};

/// Incremental reduced echelon form over F_p (p a 31-bit prime).
class FpRref {
  public:
    FpRref(std::uint32_t width, std::uint64_t p);

    bool insert(const FpRow& row);
    std::size_t rank() const { return rows_.size(); }
    std::uint64_t prime() const { return p_; }
    std::vector<std::uint32_t> pivot_cols_sorted() const;
    std::vector<std::uint32_t> free_cols_sorted() const;

    /// Canonical kernel basis vectors (one per free column, ascending),
    /// sparse form.
    std::vector<FpRow> kernel_basis() const;

  private:
    struct Row {
        std::uint32_t pivot;
        FpRow nz;  // includes (pivot, 1)
    };
    std::uint32_t width_;
    std::uint64_t p_;
    std::vector<Row> rows_;
    std::vector<std::int32_t> col2row_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::uint32_t> touched_;
};

struct ModularOptions {
    int prime_budget = 4;
    std::uint64_t seed = 0;
    int threads = 1;
    /// When set, rows are inserted in a seeded random order and the pass
    /// stops once the rank stalls; the candidate kernel is then checked
    /// against every row (mod p) and violated rows are folded back in.
    bool sampled = false;
    int sample_stall = 128;
    /// Upgrade to an exactly verified basis by substituting every vector
    /// into every row over Z.
    bool certify = true;
};

struct SolveResult {
    std::size_t ambient = 0;
    std::vector<std::vector<Rational>> basis;
    std::vector<std::uint64_t> primes;
    bool certified = false;
    std::size_t dimension() const { return basis.size(); }
    std::size_t rank() const { return ambient - basis.size(); }
};

/// Exact kernel via fraction-free elimination. Always certified.
SolveResult exact_kernel(const RowSource& src);

/// Multi-modular kernel: dimensions and canonical bases are computed modulo
/// at least two agreeing primes, lifted by CRT + rational reconstruction,
/// and (by default) certified by exact substitution. Primes produce a
/// deterministic stream from the seed; a prime whose echelon signature
/// disagrees with the consensus is discarded as unlucky.
SolveResult modular_kernel(const RowSource& src, const ModularOptions& opts);

/// Rank of the system modulo one prime (cheap probe).
std::size_t rank_mod_p(const RowSource& src, std::uint64_t p);

/// Kernel dimension modulo one prime with early abort: returns nullopt as
/// soon as the rank exceeds `max_rank` (i.e. the kernel is smaller than the
/// caller cares about). Sampled insertion + full certification pass.
std::optional<std::size_t> probe_kernel_dim(const RowSource& src, std::uint64_t p,
                                            std::size_t max_rank, std::uint64_t seed);

/// Scales a rational vector to a primitive integer vector; the entry at
/// sign_col is made positive.
std::vector<Rational> normalize_primitive(std::vector<Rational> v, std::size_t sign_col);

}  // namespace exalg

#endif
