#ifndef EXALG_MATRIX_HPP
#define EXALG_MATRIX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace exalg {

/// Exact matrix with sparse storage and dense addressing. Dimensions are
/// fixed at construction; absent entries read as zero, so the sparse and
/// dense views agree by construction.
class ExactMatrix {
  public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    ExactMatrix(std::size_t rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Rational value);
    void add(std::size_t i, std::size_t j, const Rational& value);

    /// Sparse triple view, sorted row-major.
    const std::map<Key, Rational>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    std::vector<Rational> row_dense(std::size_t i) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    ExactMatrix transpose() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// {"rows":r,"cols":c,"entries":[[i,j,"num/den"],...]} with entries
    /// sorted row-major.
    std::string to_json() const;
    static ExactMatrix from_json(const std::string& text);

  private:
    std::size_t rows_, cols_;
    std::map<Key, Rational> entries_;
};

}  // namespace exalg

#endif
