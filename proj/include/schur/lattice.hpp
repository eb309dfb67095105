#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schur/integer.hpp"
#include "schur/sparse_matrix.hpp"

namespace schur {

// Integer lattice spanned by vectors streamed in one at a time. The basis is
// kept in reduced Hermite form: one row per pivot column, pivots positive,
// zero left of the pivot, and every entry in another row's pivot column
// reduced into [0, that pivot). With a modulus m the lattice also contains
// m * Z^dim.
template <class Int>
class ImageLattice {
 public:
  explicit ImageLattice(std::size_t dim, std::optional<Int> modulus = std::nullopt)
      : dim_(dim), rows_(dim), ends_(dim, 0), scratch_(dim, Int(0)) {
    if (modulus) {
      for (std::size_t i = 0; i < dim_; ++i) {
        rows_[i].assign(dim_, Int(0));
        rows_[i][i] = *modulus;
        ends_[i] = i + 1;
        pivots_.push_back(i);
      }
      rank_ = dim_;
    }
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t inserted() const noexcept { return inserted_; }

  // Returns true when the lattice changed.
  bool insert(std::span<const std::pair<std::uint32_t, Int>> column) {
    ++inserted_;
    std::size_t first = dim_, last = 0;
    for (const auto& [i, v] : column) {
      scratch_[i] = scratch_[i] + v;
      first = std::min<std::size_t>(first, i);
      last = std::max<std::size_t>(last, i + 1);
    }
    return reduce(first, last);
  }

  bool insert_dense(const std::vector<Int>& v) {
    std::vector<std::pair<std::uint32_t, Int>> col;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) col.emplace_back(std::uint32_t(i), v[i]);
    return insert(col);
  }

  // Rows ordered by pivot column, as (pivot column, row) pairs.
  std::vector<std::pair<std::size_t, std::vector<Int>>> hermite_basis() const {
    std::vector<std::pair<std::size_t, std::vector<Int>>> out;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!rows_[i].empty()) out.emplace_back(i, rows_[i]);
    return out;
  }

  // Basis as a rank x dim matrix.
  SparseIntMatrix basis_matrix() const {
    SparseIntMatrix m(rank_, dim_);
    std::vector<std::vector<SparseIntMatrix::Entry>> cols(dim_);
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows_[i].empty()) continue;
      for (std::size_t c = i; c < ends_[i]; ++c)
        if (!is_zero(rows_[i][c])) cols[c].emplace_back(r, to_mpz(rows_[i][c]));
      ++r;
    }
    for (std::size_t c = 0; c < dim_; ++c) m.set_column(c, std::move(cols[c]));
    return m;
  }

 private:
  // row_r -= q * row_k over the support of row_k.
  void subtract(std::vector<Int>& target, std::size_t& target_end, std::size_t k, const Int& q) {
    const std::vector<Int>& row = rows_[k];
    for (std::size_t j = k; j < ends_[k]; ++j)
      if (!is_zero(row[j])) target[j] = target[j] - q * row[j];
    target_end = std::max(target_end, ends_[k]);
  }

  // Reduces row i at every pivot column right of i.
  void normalize_row(std::size_t i, std::size_t from) {
    std::vector<Int>& row = rows_[i];
    for (std::size_t k = from; k < ends_[i]; ++k) {
      if (rows_[k].empty() || is_zero(row[k])) continue;
      const Int q = floor_div(row[k], rows_[k][k]);
      if (!is_zero(q)) subtract(row, ends_[i], k, q);
    }
  }

  // Reduces column i of every row with a smaller pivot.
  void clear_column(std::size_t i) {
    const Int& pivot = rows_[i][i];
    for (std::size_t r : pivots_) {
      if (r >= i || ends_[r] <= i || is_zero(rows_[r][i])) continue;
      const Int q = floor_div(rows_[r][i], pivot);
      if (is_zero(q)) continue;
      subtract(rows_[r], ends_[r], i, q);
      normalize_row(r, i + 1);
    }
  }

  void new_row(std::size_t i, std::size_t last) {
    std::vector<Int>& v = scratch_;
    std::vector<Int>& row = rows_[i];
    row.assign(dim_, Int(0));
    const bool negate = sign_of(v[i]) < 0;
    for (std::size_t j = i; j < last; ++j) {
      row[j] = negate ? -v[j] : v[j];
      v[j] = Int(0);
    }
    ends_[i] = last;
    pivots_.insert(std::lower_bound(pivots_.begin(), pivots_.end(), i), i);
    ++rank_;
    normalize_row(i, i + 1);
    clear_column(i);
  }

  // Reduces scratch_ (nonzero only in [first, last)) against the basis and
  // stores what is left. Leaves scratch_ zero.
  bool reduce(std::size_t first, std::size_t last) {
    bool changed = false;
    std::vector<Int>& v = scratch_;
    for (std::size_t i = first; i < last; ++i) {
      if (is_zero(v[i])) continue;
      if (rows_[i].empty()) {
        new_row(i, last);
        return true;
      }
      std::vector<Int>& row = rows_[i];
      const Int a = row[i], b = v[i];
      if (divides(a, b)) {
        subtract(v, last, i, exact_div(b, a));
        continue;
      }
      auto [g, s, t] = gcd_ext(a, b);
      const Int ag = exact_div(a, g), bg = exact_div(b, g);
      const std::size_t end = std::max(last, ends_[i]);
      for (std::size_t j = i; j < end; ++j) {
        const Int r = row[j], x = v[j];
        if (is_zero(r) && is_zero(x)) continue;
        row[j] = s * r + t * x;
        v[j] = ag * x - bg * r;
      }
      ends_[i] = end;
      last = end;
      normalize_row(i, i + 1);
      clear_column(i);
      changed = true;
    }
    return changed;
  }

  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;  // rows_[i] has pivot column i, or is empty
  std::vector<std::size_t> ends_;       // one past the last possibly nonzero entry
  std::vector<std::size_t> pivots_;     // sorted
  std::vector<Int> scratch_;
  std::size_t rank_ = 0;
  std::size_t inserted_ = 0;
};

// Hermite basis of the column span of `m`, streaming its columns.
std::vector<std::pair<std::size_t, std::vector<mpz_class>>> image_lattice(const SparseIntMatrix& m);

}  // namespace schur
