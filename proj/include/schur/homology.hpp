#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/group.hpp"
#include "schur/sparse_matrix.hpp"

namespace schur {

inline constexpr std::size_t kDefaultHomologyCap = 128;
inline constexpr std::size_t kExtendedHomologyCap = 256;

// Normalized bar complex in degrees 1..3 with trivial coefficients. Bases
// are tuples of non-identity elements; element x >= 1 has index x - 1, and
// a tuple (x, y) has index (x - 1) * (n - 1) + (y - 1), likewise for triples.
struct BarBoundaries {
  SparseIntMatrix d2;  // C2 -> C1, (n-1) x (n-1)^2
  SparseIntMatrix d3;  // C3 -> C2, (n-1)^2 x (n-1)^3
};

// Materializes both boundary maps. Throws SizeError above `cap`.
BarBoundaries bar_boundaries(const FiniteGroup& g, std::size_t cap = kDefaultHomologyCap);

// Column [g1|g2|g3] of d3 as (C2 index, coefficient) pairs, merged, no zeros.
std::vector<std::pair<std::uint32_t, int>> d3_column(const FiniteGroup& g, Element g1, Element g2, Element g3);

enum class Arithmetic {
  automatic,  // int64 with overflow detection, redone in GMP on overflow
  bigint,
  machine,    // int64 only; overflow is an error
  modular,    // all arithmetic modulo p^E, E = n(n-1)/2 + 1 for |G| = p^n
};

struct HomologyOptions {
  std::size_t cap = kDefaultHomologyCap;
  std::uint64_t seed = 0;
  Arithmetic arithmetic = Arithmetic::automatic;
  // Stream every d3 column instead of only those whose last entry is a generator.
  bool all_columns = false;
};

struct MultiplierResult {
  std::string group_id;
  AbelianInvariants invariants;
  std::optional<unsigned> order_exponent;  // log_p |M(G)| for p-groups
  std::string method;                      // "bar-resolution" or "calculus"

  // engine diagnostics
  std::size_t lattice_dimension = 0;
  std::size_t columns_streamed = 0;
  bool used_bigint = false;
};

// H_2(G; Z) from the normalized bar complex. See homology.cpp for the
// reduction of the chain complex that precedes the lattice computation.
// Throws SizeError above the cap and ConsistencyError if the free rank of
// the result is not zero.
MultiplierResult second_homology(const FiniteGroup& g, const HomologyOptions& opts = {});

// log_p |A| when |A| is a power of p (|A| = 1 gives 0).
std::optional<unsigned> log_p_order(const AbelianInvariants& a, std::uint64_t p);

}  // namespace schur
