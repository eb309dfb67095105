#include "schur/calculus.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "schur/errors.hpp"
#include "schur/homology.hpp"
#include "schur/number_theory.hpp"

namespace schur {

namespace {

unsigned log_exact(std::uint64_t value, std::uint64_t p) {
  unsigned k = 0;
  while (value > 1 && value % p == 0) {
    value /= p;
    ++k;
  }
  if (value != 1) throw DomainError("not a power of " + std::to_string(p));
  return k;
}

std::uint64_t prime_of(const AbelianInvariants& a) {
  auto pp = as_prime_power(a.order());
  if (!pp) throw DomainError("abelian multiplier formula needs a non-trivial p-group, got order " +
                             std::to_string(a.order()));
  return pp->p;
}

void partitions_of(unsigned n, unsigned largest, Partition& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(n, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

PGroupProfile PGroupProfile::of(const FiniteGroup& g, std::optional<unsigned> multiplier_exponent) {
  auto pp = as_prime_power(g.order());
  if (!pp) throw DomainError("group of order " + std::to_string(g.order()) + " is not a non-trivial p-group");
  PGroupProfile out;
  out.p = pp->p;
  out.n = pp->exponent;
  out.k = log_exact(derived_subgroup(g).members.size(), pp->p);
  out.multiplier_exponent = multiplier_exponent;
  return out;
}

AbelianInvariants multiplier_abelian(const AbelianInvariants& a) {
  prime_of(a);
  const auto divisors = a.elementary_divisors();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) out.push_back(std::min(divisors[i], divisors[j]));
  return AbelianInvariants::from_cyclic(out);
}

unsigned multiplier_abelian_exponent(const Partition& exponents) {
  unsigned m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (std::size_t j = i + 1; j < exponents.size(); ++j) m += std::min(exponents[i], exponents[j]);
  return m;
}

bool abelian_formula_validated() {
  static std::once_flag once;
  static bool ok = false;
  std::call_once(once, [] {
    ok = true;
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned n = 1; checked_pow(p, n) <= 64; ++n) {
        std::vector<Partition> parts;
        Partition prefix;
        partitions_of(n, n, prefix, parts);
        for (const auto& part : parts) {
          FiniteGroup g = FiniteGroup::trivial();
          std::vector<std::uint64_t> orders;
          for (unsigned e : part) {
            g = direct_product(g, FiniteGroup::cyclic(checked_pow(p, e)));
            orders.push_back(checked_pow(p, e));
          }
          auto closed = multiplier_abelian(AbelianInvariants::from_cyclic(orders));
          if (closed != second_homology(g).invariants) ok = false;
          if (log_p_order(closed, p) != multiplier_abelian_exponent(part)) ok = false;
        }
      }
    }
  });
  return ok;
}

AbelianInvariants tensor_abelian(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<std::uint64_t> out;
  for (auto d : a.factors())
    for (auto e : b.factors()) out.push_back(std::gcd(d, e));
  return AbelianInvariants::from_cyclic(out);
}

AbelianInvariants multiplier_direct_product(const AbelianInvariants& m_h, const AbelianInvariants& m_k,
                                            const AbelianInvariants& h_ab, const AbelianInvariants& k_ab) {
  return m_h + m_k + tensor_abelian(h_ab, k_ab);
}

unsigned multiplier_exponent_direct_product(unsigned m_h, unsigned m_k, const AbelianInvariants& h_ab,
                                            const AbelianInvariants& k_ab, std::uint64_t p) {
  return m_h + m_k + log_exact(tensor_abelian(h_ab, k_ab).order(), p);
}

std::uint64_t multiplier_extraspecial(std::uint64_t p, unsigned m, std::optional<ExtraspecialType> type) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("extraspecial groups have order p^(2m+1) with m >= 1");
  if (m >= 2) return checked_pow(p, 2 * m * m - m - 1);
  if (!type) throw DomainError("order p^3 needs the extraspecial type");
  const bool dyadic = *type == ExtraspecialType::dihedral || *type == ExtraspecialType::quaternion;
  if (dyadic != (p == 2)) throw DomainError("extraspecial type does not exist for p = " + std::to_string(p));
  switch (*type) {
    case ExtraspecialType::dihedral: return 2;
    case ExtraspecialType::quaternion: return 1;
    case ExtraspecialType::exponent_p: return p * p;
    case ExtraspecialType::exponent_p2: return 1;
  }
  return 1;
}

unsigned t_invariant(const PGroupProfile& profile) {
  if (!profile.multiplier_exponent) throw DomainError("multiplier order not set");
  const long t = long(profile.n) * (profile.n - 1) / 2 - long(*profile.multiplier_exponent);
  if (t < 0)
    throw ConsistencyError("log_p |M(G)| = " + std::to_string(*profile.multiplier_exponent) +
                           " exceeds n(n-1)/2 for n = " + std::to_string(profile.n));
  return unsigned(t);
}

MultiplierBound nonabelian_multiplier_bound(const PGroupProfile& profile) {
  if (profile.k == 0) throw DomainError("bound applies to non-abelian groups (k >= 1)");
  const unsigned n = profile.n, k = profile.k;
  if (k >= n) throw DomainError("derived subgroup must be proper");
  MultiplierBound out;
  out.exponent = (n + k - 2) * (n - k - 1) / 2 + 1;
  const unsigned k1 = (n - 1) * (n - 2) / 2 + 1;
  out.meets_k1_equality = profile.multiplier_exponent && *profile.multiplier_exponent == k1;
  return out;
}

std::vector<Partition> abelian_t4_search(std::uint64_t p, unsigned n_max) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n_max > 30) throw DomainError("n_max is limited to 30");
  std::vector<Partition> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Partition> parts;
    Partition prefix;
    partitions_of(n, n, prefix, parts);
    for (auto& part : parts) {
      const long t = long(n) * (n - 1) / 2 - long(multiplier_abelian_exponent(part));
      if (t == 4) out.push_back(std::move(part));
    }
  }
  return out;
}

}  // namespace schur
