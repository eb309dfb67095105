#include "schur/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "schur/errors.hpp"

namespace schur {

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

namespace {

SparseIntMatrix::Column normalize(std::vector<SparseIntMatrix::Entry> entries, std::size_t rows) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseIntMatrix::Column merged;
  for (auto& e : entries) {
    if (e.first >= rows) throw DomainError("row index out of range");
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  SparseIntMatrix::Column out;
  for (auto& e : merged)
    if (sgn(e.second) != 0) out.push_back(std::move(e));
  return out;
}

}  // namespace

void SparseIntMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
  columns_.at(c) = normalize(std::move(entries), rows_);
}

void SparseIntMatrix::push_column(std::vector<Entry> entries) {
  columns_.push_back(normalize(std::move(entries), rows_));
}

mpz_class SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const Column& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  SparseIntMatrix m(rows.size(), ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    std::vector<Entry> col;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].at(c) != 0) col.emplace_back(std::uint32_t(r), mpz_class(rows[r][c]));
    m.set_column(c, std::move(col));
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols() != other.rows()) throw DomainError("matrix dimensions do not match");
  SparseIntMatrix out(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) {
    std::vector<Entry> acc;
    for (const auto& [k, v] : other.column(c))
      for (const auto& [r, w] : columns_[k]) acc.emplace_back(r, v * w);
    out.set_column(c, std::move(acc));
  }
  return out;
}

void SparseIntMatrix::write_triplets(std::ostream& os) const {
  os << rows_ << ' ' << cols() << ' ' << nonzeros() << '\n';
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) os << r << ' ' << c << ' ' << v << '\n';
}

AbelianInvariants SnfResult::torsion() const {
  std::vector<std::uint64_t> f;
  for (const auto& d : invariant_factors) {
    if (d == 1) continue;
    if (!d.fits_ulong_p()) throw SizeError("invariant factor exceeds 64 bits");
    f.push_back(d.get_ui());
  }
  return AbelianInvariants::from_cyclic(f);
}

std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> diag) {
  std::vector<mpz_class> big;
  std::size_t units = 0;
  for (auto& d : diag) {
    d = abs(d);
    if (d == 0) throw DomainError("zero on the diagonal");
    if (d == 1)
      ++units;
    else
      big.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      mpz_class g = gcd(big[i], big[j]);
      if (g == big[i]) continue;
      mpz_class l = big[i] / g * big[j];
      big[i] = g;
      big[j] = l;
    }
  std::vector<mpz_class> out(units, mpz_class(1));
  for (auto& d : big) {
    if (d == 1)
      out.insert(out.begin(), mpz_class(1));
    else
      out.push_back(std::move(d));
  }
  return out;
}

namespace {

using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;

// row_k -= q * row_r
void axpy(Row& target, const mpz_class& q, const Row& src, std::vector<std::uint32_t>& col_count) {
  Row out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || src[j].first < target[i].first) {
      out.emplace_back(src[j].first, -q * src[j].second);
      ++col_count[src[j].first];
      ++j;
    } else {
      mpz_class v = target[i].second - q * src[j].second;
      if (sgn(v) != 0)
        out.emplace_back(target[i].first, std::move(v));
      else
        --col_count[target[i].first];
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts) {
  std::vector<Row> rows(m.rows());
  std::vector<std::uint32_t> col_count(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace_back(std::uint32_t(c), v);
      ++col_count[c];
    }
  std::vector<std::uint32_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) active.push_back(std::uint32_t(r));

  std::vector<mpz_class> diag;
  for (;;) {
    // pivot: least |value|, then Markowitz cost, then seeded hash
    std::size_t best_pos = 0, best_idx = 0;
    const mpz_class* best_val = nullptr;
    std::uint64_t best_cost = 0, best_hash = 0;
    for (std::size_t pos = 0; pos < active.size(); ++pos) {
      const Row& row = rows[active[pos]];
      for (std::size_t idx = 0; idx < row.size(); ++idx) {
        const mpz_class& v = row[idx].second;
        int cmp = best_val ? mpz_cmpabs(v.get_mpz_t(), best_val->get_mpz_t()) : -1;
        if (cmp > 0) continue;
        std::uint64_t cost = std::uint64_t(row.size() - 1) * (col_count[row[idx].first] - 1);
        std::uint64_t h = mix(opts.seed ^ (std::uint64_t(active[pos]) << 32 | row[idx].first));
        if (cmp == 0 && (cost > best_cost || (cost == best_cost && h >= best_hash))) continue;
        best_pos = pos;
        best_idx = idx;
        best_val = &v;
        best_cost = cost;
        best_hash = h;
      }
    }
    if (!best_val) break;
    const std::uint32_t r = active[best_pos];
    const std::uint32_t c = rows[r][best_idx].first;
    const mpz_class pivot = rows[r][best_idx].second;

    // clear column c in the other rows, leaving remainders when not divisible
    bool column_clear = true;
    for (std::uint32_t k : active) {
      if (k == r) continue;
      Row& row = rows[k];
      auto it = std::lower_bound(row.begin(), row.end(), c,
                                 [](const auto& e, std::uint32_t col) { return e.first < col; });
      if (it == row.end() || it->first != c) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), pivot.get_mpz_t());
      axpy(row, q, rows[r], col_count);
      auto it2 = std::lower_bound(row.begin(), row.end(), c,
                                  [](const auto& e, std::uint32_t col) { return e.first < col; });
      if (it2 != row.end() && it2->first == c) column_clear = false;
    }
    if (column_clear) {
      // column operations now touch row r only
      Row& row = rows[r];
      Row kept;
      for (auto& [col, v] : row) {
        if (col == c) continue;
        mpz_class rem;
        mpz_fdiv_r(rem.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
        if (sgn(rem) != 0)
          kept.emplace_back(col, std::move(rem));
        else
          --col_count[col];
      }
      if (kept.empty()) {
        --col_count[c];
        diag.push_back(pivot);
        row.clear();
      } else {
        // keep the pivot in place; a smaller remainder will be chosen next
        kept.emplace_back(c, pivot);
        std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        row = std::move(kept);
      }
    }
    std::vector<std::uint32_t> still;
    for (std::uint32_t k : active)
      if (!rows[k].empty()) still.push_back(k);
    active = std::move(still);
  }
  SnfResult res;
  res.rank = diag.size();
  res.invariant_factors = normalize_diagonal(std::move(diag));
  return res;
}

}  // namespace schur
