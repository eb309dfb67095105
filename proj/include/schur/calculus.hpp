#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/group.hpp"

namespace schur {

// |G| = p^n, |G'| = p^k, and log_p |M(G)| once known.
struct PGroupProfile {
  std::uint64_t p = 2;
  unsigned n = 1;
  unsigned k = 0;
  std::optional<unsigned> multiplier_exponent;

  // Throws DomainError unless g is a non-trivial p-group.
  static PGroupProfile of(const FiniteGroup& g, std::optional<unsigned> multiplier_exponent = std::nullopt);
};

// Exponents a_1 >= a_2 >= ... of a p-group Z_{p^a_1} x Z_{p^a_2} x ...
using Partition = std::vector<unsigned>;

// M(Z_{m_1} x ... x Z_{m_r}) = prod_{i<j} Z_{gcd(m_i, m_j)} for a p-group.
// Throws DomainError for the trivial group or for orders that are not a
// power of a single prime.
AbelianInvariants multiplier_abelian(const AbelianInvariants& a);
unsigned multiplier_abelian_exponent(const Partition& exponents);

// True once multiplier_abelian has matched the homology engine on every
// abelian p-group of order <= 64 (p = 2, 3, 5). Runs the comparison on first
// call only.
bool abelian_formula_validated();

// A (x) B = sum over pairs of Z_{gcd(d_i, e_j)}.
AbelianInvariants tensor_abelian(const AbelianInvariants& a, const AbelianInvariants& b);

// M(H x K) = M(H) x M(K) x (H_ab (x) K_ab).
AbelianInvariants multiplier_direct_product(const AbelianInvariants& m_h, const AbelianInvariants& m_k,
                                            const AbelianInvariants& h_ab, const AbelianInvariants& k_ab);
// Same rule on orders only: log_p |M(H x K)| for p-groups.
unsigned multiplier_exponent_direct_product(unsigned m_h, unsigned m_k, const AbelianInvariants& h_ab,
                                            const AbelianInvariants& k_ab, std::uint64_t p);

enum class ExtraspecialType {
  dihedral,       // D8
  quaternion,     // Q8
  exponent_p,     // order p^3, odd p
  exponent_p2,    // order p^3, odd p
};

// |M(G)| for an extraspecial group of order p^(2m+1). The type is only
// consulted when m = 1.
std::uint64_t multiplier_extraspecial(std::uint64_t p, unsigned m, std::optional<ExtraspecialType> type = std::nullopt);

// n(n-1)/2 - log_p |M(G)|. Throws ConsistencyError if negative and
// DomainError if the multiplier is unknown.
unsigned t_invariant(const PGroupProfile& profile);

struct MultiplierBound {
  unsigned exponent;       // log_p of the upper bound for |M(G)|, given n and k
  bool meets_k1_equality;  // m_G == (n-1)(n-2)/2 + 1
};

// Upper bound (n+k-2)(n-k-1)/2 + 1 for non-abelian p-groups. Throws
// DomainError when k = 0.
MultiplierBound nonabelian_multiplier_bound(const PGroupProfile& profile);

// Partitions of n <= n_max whose abelian group has t = 4, ordered by n and
// then lexicographically descending. n_max <= 30.
std::vector<Partition> abelian_t4_search(std::uint64_t p, unsigned n_max);

}  // namespace schur
