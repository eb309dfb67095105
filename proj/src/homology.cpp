// H_2(G; Z) from the normalized bar complex.
//
// coker(d3: C3 -> C2) is H_2 plus a free part isomorphic to im d2, which has
// rank n - 1 because H_1 is finite. H_2 is therefore the torsion of coker d3,
// and the free rank n - 1 is checked as a consistency condition.
//
// Two exact reductions keep the lattice small:
//  * Columns. d3 d4 [g|h|k|s] = 0 gives
//      d3[g|h|ks] = d3[h|k|s] - d3[gh|k|s] + d3[g|hk|s] + d3[g|h|k],
//    so by induction on the length of the last entry the image of d3 is
//    spanned by the columns [g|h|s] with s in a generating set S.
//  * Coordinates. Column [g|h|s] reads [g|hs] = [g|h] + [gh|s] - [h|s] in
//    the cokernel. Walking a breadth-first spanning tree of the right Cayley
//    graph on S eliminates every [g|x] with x outside S (a Tietze move with a
//    unit coefficient), leaving the (n-1)|S| coordinates [y|s].
#include "schur/homology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "schur/errors.hpp"
#include "schur/integer.hpp"
#include "schur/lattice.hpp"
#include "schur/number_theory.hpp"

namespace schur {

std::vector<std::pair<std::uint32_t, int>> d3_column(const FiniteGroup& g, Element a, Element b, Element c) {
  const std::uint32_t m = std::uint32_t(g.order() - 1);
  std::vector<std::pair<std::uint32_t, int>> terms;
  auto add = [&](Element x, Element y, int sign) {
    if (x != 0 && y != 0) terms.emplace_back((x - 1) * m + (y - 1), sign);
  };
  if (a == 0 || b == 0 || c == 0) return {};
  add(b, c, +1);
  add(g.mul(a, b), c, -1);
  add(a, g.mul(b, c), +1);
  add(a, b, -1);
  std::sort(terms.begin(), terms.end());
  std::vector<std::pair<std::uint32_t, int>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

BarBoundaries bar_boundaries(const FiniteGroup& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw SizeError("group of order " + std::to_string(n) + " exceeds the homology cap " + std::to_string(cap) +
                    "; use the calculus rules or raise --homology-cap");
  const std::size_t m = n - 1;
  BarBoundaries out{SparseIntMatrix(m, m * m), SparseIntMatrix(m * m, m * m * m)};
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) {
      std::vector<SparseIntMatrix::Entry> col;
      col.emplace_back(b - 1, 1);
      col.emplace_back(a - 1, 1);
      if (Element ab = g.mul(a, b); ab != 0) col.emplace_back(ab - 1, -1);
      out.d2.set_column((a - 1) * m + (b - 1), std::move(col));
    }
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c) {
        std::vector<SparseIntMatrix::Entry> col;
        for (auto [r, v] : d3_column(g, a, b, c)) col.emplace_back(r, v);
        out.d3.set_column(((a - 1) * m + (b - 1)) * m + (c - 1), std::move(col));
      }
  return out;
}

std::optional<unsigned> log_p_order(const AbelianInvariants& a, std::uint64_t p) {
  std::uint64_t order = a.order();
  unsigned k = 0;
  while (order % p == 0) {
    order /= p;
    ++k;
  }
  if (order != 1) return std::nullopt;
  return k;
}

namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

void merge_into(SparseVec& acc, const SparseVec& v, std::int64_t sign) {
  for (const auto& [i, x] : v) acc.emplace_back(i, sign * x);
}

void compress(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (const auto& t : v) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  v = std::move(out);
}

// Reduced coordinates of the normalized 2-chains.
class ChainReduction {
 public:
  ChainReduction(const FiniteGroup& g, std::vector<Element> gens) : g_(g), gens_(std::move(gens)) {
    const std::size_t n = g.order();
    parent_.assign(n, 0);
    via_.assign(n, 0);
    std::vector<unsigned char> seen(n);
    seen[0] = 1;
    bfs_.push_back(0);
    for (std::size_t qi = 0; qi < bfs_.size(); ++qi) {
      Element x = bfs_[qi];
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        Element y = g.mul(x, gens_[j]);
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = x;
          via_[y] = std::uint32_t(j);
          bfs_.push_back(y);
        }
      }
    }
    if (bfs_.size() != n) throw ConsistencyError("generating set does not generate the group");
  }

  std::size_t dimension() const { return (g_.order() - 1) * gens_.size(); }
  const std::vector<Element>& gens() const { return gens_; }

  std::uint32_t base(Element y, std::size_t j) const { return std::uint32_t((y - 1) * gens_.size() + j); }

  // row[x] = reduced coordinates of [first|x]
  std::vector<SparseVec> expand(Element first) const {
    std::vector<SparseVec> row(g_.order());
    for (std::size_t k = 1; k < bfs_.size(); ++k) {
      Element x = bfs_[k], h = parent_[x];
      std::size_t j = via_[x];
      SparseVec v;
      if (h == 0) {
        v.emplace_back(base(first, j), 1);
      } else {
        v = row[h];
        if (Element fh = g_.mul(first, h); fh != 0) v.emplace_back(base(fh, j), 1);
        v.emplace_back(base(h, j), -1);
        compress(v);
      }
      row[x] = std::move(v);
    }
    return row;
  }

 private:
  const FiniteGroup& g_;
  std::vector<Element> gens_;
  std::vector<Element> bfs_;
  std::vector<Element> parent_;
  std::vector<std::uint32_t> via_;
};

// d2 applied to the four-term column [h|k] - [gh|k] + [g|hk] - [g|h].
bool boundary_vanishes(const FiniteGroup& G, Element g, Element h, Element k) {
  std::int64_t acc[12];
  Element at[12];
  int used = 0;
  auto d2 = [&](Element a, Element b, int sign) {
    if (a == 0 || b == 0) return;
    at[used] = b, acc[used++] = sign;
    at[used] = a, acc[used++] = sign;
    if (Element ab = G.mul(a, b); ab != 0) at[used] = ab, acc[used++] = -sign;
  };
  d2(h, k, +1);
  d2(G.mul(g, h), k, -1);
  d2(g, G.mul(h, k), +1);
  d2(g, h, -1);
  for (int i = 0; i < used; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < used; ++j)
      if (at[j] == at[i]) s += acc[j];
    if (s != 0) return false;
  }
  return true;
}

template <class Int>
MultiplierResult run(const FiniteGroup& G, const HomologyOptions& opts, std::optional<std::int64_t> modulus) {
  const std::size_t n = G.order();
  ChainReduction red(G, generating_set(G));
  const std::size_t dim = red.dimension();
  std::optional<Int> mod;
  if (modulus) mod = Int(*modulus);
  ImageLattice<Int> lattice(dim, mod);

  std::vector<Element> firsts(n - 1);
  std::iota(firsts.begin(), firsts.end(), Element(1));
  if (opts.seed) std::shuffle(firsts.begin(), firsts.end(), std::mt19937_64(opts.seed));

  std::vector<Element> lasts;
  if (opts.all_columns) {
    for (Element k = 1; k < n; ++k) lasts.push_back(k);
  } else {
    lasts = red.gens();
  }
  std::vector<std::vector<SparseVec>> all_rows;
  if (opts.all_columns) {
    all_rows.resize(n);
    for (Element a = 1; a < n; ++a) all_rows[a] = red.expand(a);
  }

  MultiplierResult res;
  std::vector<std::pair<std::uint32_t, Int>> column;
  for (Element g : firsts) {
    std::vector<SparseVec> local;
    const std::vector<SparseVec>& row_g = opts.all_columns ? all_rows[g] : (local = red.expand(g));
    for (Element h = 1; h < n; ++h) {
      const Element gh = G.mul(g, h);
      for (std::size_t kj = 0; kj < lasts.size(); ++kj) {
        const Element k = lasts[kj];
        if (!boundary_vanishes(G, g, h, k)) throw ConsistencyError("d2 * d3 != 0");
        SparseVec acc;
        if (opts.all_columns) {
          merge_into(acc, all_rows[h][k], +1);
          if (gh != 0) merge_into(acc, all_rows[gh][k], -1);
        } else {
          acc.emplace_back(red.base(h, kj), 1);
          if (gh != 0) acc.emplace_back(red.base(gh, kj), -1);
        }
        merge_into(acc, row_g[G.mul(h, k)], +1);
        merge_into(acc, row_g[h], -1);
        compress(acc);
        if (acc.empty()) continue;
        column.clear();
        for (const auto& [i, x] : acc) column.emplace_back(i, Int(x));
        lattice.insert(column);
        ++res.columns_streamed;
      }
    }
  }

  SnfOptions snf_opts;
  snf_opts.seed = opts.seed;
  SnfResult snf = smith_normal_form(lattice.basis_matrix(), snf_opts);
  std::size_t free_rank;
  std::vector<std::uint64_t> torsion;
  if (modulus) {
    // coker is H_2 + (Z/m)^(n-1); H_2 has exponent below m
    std::size_t full = 0;
    for (const auto& d : snf.invariant_factors) {
      if (d == *modulus)
        ++full;
      else if (d != 1)
        torsion.push_back(d.get_ui());
    }
    free_rank = full + (dim - snf.rank);
  } else {
    free_rank = dim - snf.rank;
    for (const auto& d : snf.invariant_factors) {
      if (d == 1) continue;
      if (!d.fits_ulong_p()) throw ConsistencyError("H2 invariant factor exceeds 64 bits");
      torsion.push_back(d.get_ui());
    }
  }
  if (free_rank != n - 1)
    throw ConsistencyError("coker d3 has free rank " + std::to_string(free_rank) + ", expected " +
                           std::to_string(n - 1) + "; H2 would not be finite");
  res.invariants = AbelianInvariants::from_cyclic(torsion);
  res.lattice_dimension = dim;
  return res;
}

}  // namespace

MultiplierResult second_homology(const FiniteGroup& g, const HomologyOptions& opts) {
  const std::size_t n = g.order();
  if (n > opts.cap)
    throw SizeError("group of order " + std::to_string(n) + " exceeds the homology cap " + std::to_string(opts.cap) +
                    "; use the calculus rules or raise --homology-cap");
  MultiplierResult res;
  auto pp = as_prime_power(n);
  if (n > 1) {
    switch (opts.arithmetic) {
      case Arithmetic::bigint:
        res = run<mpz_class>(g, opts, std::nullopt);
        res.used_bigint = true;
        break;
      case Arithmetic::machine:
        try {
          res = run<CheckedInt>(g, opts, std::nullopt);
        } catch (const ArithmeticOverflow&) {
          throw SizeError("int64 overflow in machine arithmetic mode");
        }
        break;
      case Arithmetic::automatic:
        try {
          res = run<CheckedInt>(g, opts, std::nullopt);
        } catch (const ArithmeticOverflow&) {
          res = run<mpz_class>(g, opts, std::nullopt);
          res.used_bigint = true;
        }
        break;
      case Arithmetic::modular: {
        if (!pp) throw DomainError("modular arithmetic needs a group of prime-power order");
        unsigned e = pp->exponent * (pp->exponent - 1) / 2 + 1;
        std::uint64_t m = checked_pow(pp->p, e);
        if (m > (std::uint64_t(1) << 30)) throw SizeError("modulus p^E too large for int64 elimination");
        try {
          res = run<CheckedInt>(g, opts, std::int64_t(m));
        } catch (const ArithmeticOverflow&) {
          res = run<mpz_class>(g, opts, std::int64_t(m));
          res.used_bigint = true;
        }
        break;
      }
    }
  }
  res.method = "bar-resolution";
  if (pp) res.order_exponent = log_p_order(res.invariants, pp->p);
  if (n == 1) res.order_exponent = 0;
  return res;
}

std::vector<std::pair<std::size_t, std::vector<mpz_class>>> image_lattice(const SparseIntMatrix& m) {
  ImageLattice<mpz_class> lattice(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<std::pair<std::uint32_t, mpz_class>> col(m.column(c).begin(), m.column(c).end());
    lattice.insert(col);
  }
  return lattice.hermite_basis();
}

}  // namespace schur
