#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace schur {

// A finite abelian group as invariant factors d_1 | d_2 | ... | d_r, each >= 2.
// The empty list is the trivial group.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  // Accepts any list of cyclic orders (1s allowed, any order, no divisibility
  // required) and renormalizes to the invariant-factor chain.
  static AbelianInvariants from_cyclic(const std::vector<std::uint64_t>& orders);
  static AbelianInvariants from_cyclic(std::initializer_list<std::uint64_t> orders) {
    return from_cyclic(std::vector<std::uint64_t>(orders));
  }
  // Elementary divisors: for each prime, the prime-power orders of a
  // primary decomposition, e.g. Z2 x Z4 x Z3 -> {2, 4, 3}.
  std::vector<std::uint64_t> elementary_divisors() const;

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }
  std::uint64_t order() const;
  std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  // Direct sum.
  AbelianInvariants operator+(const AbelianInvariants& other) const;

  // "1", "Z2", "Z2 x Z4".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a);

}  // namespace schur
