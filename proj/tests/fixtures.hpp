#pragma once

#include <string>

#include "schur/coset_enumeration.hpp"
#include "schur/presentation.hpp"

namespace fixtures {

inline schur::FiniteGroup group(const std::string& text, std::optional<std::uint64_t> p = std::nullopt) {
  return schur::todd_coxeter(schur::parse_presentation(text), 1'000'000, p);
}

inline schur::FiniteGroup cyclic(std::size_t n) { return schur::FiniteGroup::cyclic(n); }
inline schur::FiniteGroup d8() { return group("gens: a b; rels: a^4, b^2, (ab)^2;"); }
inline schur::FiniteGroup q8() { return group("gens: a b; rels: a^4, a^2 = b^2, b^-1 a b = a^-1;"); }
inline schur::FiniteGroup e1(std::uint64_t p) { return group("gens: a b; rels: a^p, b^p, [a,b,a] = [a,b,b] = 1;", p); }
inline schur::FiniteGroup e2(std::uint64_t p) { return group("gens: a b; rels: a^(p^2), b^p, [a,b] = a^p;", p); }

inline schur::FiniteGroup product(const schur::FiniteGroup& a, const schur::FiniteGroup& b) {
  return schur::direct_product(a, b);
}

inline schur::FiniteGroup elementary(std::uint64_t p, unsigned rank) {
  schur::FiniteGroup g = schur::FiniteGroup::trivial();
  for (unsigned i = 0; i < rank; ++i) g = product(g, cyclic(p));
  return g;
}

}  // namespace fixtures
