#include "schur/abelian.hpp"

#include <algorithm>
#include <map>

#include "schur/errors.hpp"
#include "schur/number_theory.hpp"

namespace schur {

AbelianInvariants AbelianInvariants::from_cyclic(const std::vector<std::uint64_t>& orders) {
  // prime -> exponents of its primary components
  std::map<std::uint64_t, std::vector<unsigned>> primary;
  for (std::uint64_t d : orders) {
    if (d == 0) throw DomainError("cyclic factor of infinite order");
    for (auto [p, k] : factorize(d)) primary[p].push_back(k);
  }
  std::size_t len = 0;
  for (auto& [p, ks] : primary) {
    std::sort(ks.begin(), ks.end());
    len = std::max(len, ks.size());
  }
  std::vector<std::uint64_t> chain(len, 1);
  for (const auto& [p, ks] : primary) {
    // largest exponents go to the last factors
    std::size_t offset = len - ks.size();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      std::uint64_t q = checked_pow(p, ks[i]);
      if (__builtin_mul_overflow(chain[offset + i], q, &chain[offset + i]))
        throw SizeError("invariant factor overflows 64 bits");
    }
  }
  AbelianInvariants out;
  out.factors_ = std::move(chain);
  return out;
}

std::vector<std::uint64_t> AbelianInvariants::elementary_divisors() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : factors_)
    for (auto [p, k] : factorize(d)) out.push_back(checked_pow(p, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t r = 1;
  for (std::uint64_t d : factors_)
    if (__builtin_mul_overflow(r, d, &r)) throw SizeError("group order overflows 64 bits");
  return r;
}

AbelianInvariants AbelianInvariants::operator+(const AbelianInvariants& other) const {
  std::vector<std::uint64_t> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic(all);
}

std::string AbelianInvariants::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a) {
  return os << a.to_string();
}

}  // namespace schur
