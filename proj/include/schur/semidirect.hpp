#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schur/group.hpp"

namespace schur {

// Jordan block sizes of a unipotent matrix, descending.
using JordanType = std::vector<unsigned>;

// Types of non-identity unipotent elements of GL(rank, p) with order p,
// i.e. partitions of rank into blocks of size <= p other than all ones.
// Descending lexicographic order.
std::vector<JordanType> unipotent_jordan_types(std::uint64_t p, unsigned rank);

// Z_p^rank x| Z_p where the generator acts by I + N, N nilpotent in Jordan
// form of the given type. Element (v, t) is indexed t * p^rank + sum v_i p^i
// and (v, s)(w, t) = (v + A^s w, s + t).
FiniteGroup unipotent_semidirect_product(std::uint64_t p, std::span<const unsigned> jordan_type,
                                         std::size_t max_order = kDefaultMaxOrder);

struct SemidirectCandidate {
  JordanType jordan_type;
  FiniteGroup group;
};

// One group per conjugacy class of order-p elements in GL(rank, p).
// Throws DomainError unless p is an odd prime and order_of_action == p, and
// SizeError when p^(rank+1) exceeds max_order.
std::vector<SemidirectCandidate> semidirect_search(std::uint64_t p, unsigned rank, std::uint64_t order_of_action,
                                                   std::size_t max_order = kDefaultMaxOrder);

}  // namespace schur
