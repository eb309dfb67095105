#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur/abelian.hpp"

namespace schur {

// Dense element index 0..n-1. Element 0 is always the identity.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

// A finite group given by its Cayley table. Immutable once built; every
// constructor path validates the group axioms (associativity fully for
// n <= 256, on 10^5 random triples above).
class FiniteGroup {
 public:
  // table[i * order + j] = index of g_i * g_j. Throws InvalidGroupError.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);

  // Cayley-table text format: first line n, then n rows of n indices.
  static FiniteGroup from_text(std::string_view text);
  std::string to_text() const;

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, std::int64_t k) const;
  // [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  // b^-1 a b
  Element conjugate(Element a, Element b) const noexcept { return mul(mul(inv(b), a), b); }
  std::uint64_t element_order(Element a) const;
  std::vector<std::uint64_t> element_orders() const;
  bool is_abelian() const;

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + std::size_t(a) * n_, n_};
  }
  const std::vector<Element>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> table);
  void validate();

  std::size_t n_ = 1;
  std::vector<Element> table_{0};
  std::vector<Element> inverse_{0};
};

// Members are sorted and always contain the identity.
struct Subgroup {
  std::vector<Element> members;
  bool normal = false;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Element x) const;
};

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> gens);
// Validates closure; sets the normal flag by testing conjugation.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// G' G^p; only defined for groups of prime-power order.
std::optional<Subgroup> frattini_subgroup(const FiniteGroup& g);

// The subgroup as a group in its own right; member i maps to index i.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection;  // element of G -> coset index
};

// Throws InvalidGroupError when n is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

// Element (i, j) is indexed i * |H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t max_order = kDefaultMaxOrder);

// Invariant factors of an abelian group, from its order statistics.
AbelianInvariants abelian_invariants(const FiniteGroup& g);
AbelianInvariants abelianization(const FiniteGroup& g);

// One representative per class plus its size, classes ordered by smallest member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

// Greedy generating set. For p-groups it lifts a basis of the Frattini
// quotient and so is minimal. Candidates are tried in `preference` order
// first, then by index.
std::vector<Element> generating_set(const FiniteGroup& g, std::span<const Element> preference = {});

struct GroupFingerprint {
  std::size_t order = 1;
  AbelianInvariants abelianization;
  AbelianInvariants center;
  std::size_t derived_order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::size_t> class_sizes;         // sorted
  std::map<std::uint64_t, std::size_t> order_statistics;  // element order -> count

  // Predicates derived from the fields above.
  bool abelian = false;
  bool elementary_abelian = false;
  bool extraspecial = false;
  std::optional<std::size_t> frattini_order;  // prime-power order only

  // Only the isomorphism-invariant fields take part.
  bool same_invariants(const GroupFingerprint& o) const {
    return order == o.order && abelianization == o.abelianization && center == o.center &&
           derived_order == o.derived_order && exponent == o.exponent &&
           class_sizes == o.class_sizes && order_statistics == o.order_statistics;
  }
};

GroupFingerprint structure_predicates(const FiniteGroup& g);

}  // namespace schur
