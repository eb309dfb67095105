#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "schur/abelian.hpp"

namespace schur {

// Column-major sparse integer matrix. Within a column, row indices are
// strictly increasing and no stored value is zero.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, mpz_class>;
  using Column = std::vector<Entry>;

  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nonzeros() const;

  // Entries may come in any order and may repeat; they are summed and
  // zeros dropped.
  void set_column(std::size_t c, std::vector<Entry> entries);
  // Appends a new column (same normalization as set_column).
  void push_column(std::vector<Entry> entries);
  const Column& column(std::size_t c) const { return columns_.at(c); }
  mpz_class at(std::size_t r, std::size_t c) const;

  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows);

  // this * other
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const { return nonzeros() == 0; }

  // Triplet dump: header "rows cols nnz", then "row col value" lines.
  void write_triplets(std::ostream& os) const;

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

struct SnfResult {
  // Nonzero diagonal of the Smith form, d_1 | d_2 | ... (unit factors kept).
  std::vector<mpz_class> invariant_factors;
  std::size_t rank = 0;

  // Factors greater than one, as a finite abelian group.
  AbelianInvariants torsion() const;
};

struct SnfOptions {
  // Seeds the tie-break among equally good pivots; the result never depends on it.
  std::uint64_t seed = 0;
};

// Sparse elimination over Z. Pivots minimize |value|, then Markowitz cost
// (row count - 1) * (column count - 1).
SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts = {});

// Divisibility-chain normalization of a list of nonzero diagonal entries.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> diag);

}  // namespace schur
