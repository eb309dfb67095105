#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schur/group.hpp"

namespace schur {

enum class IsoVerdict { isomorphic, not_isomorphic, undecided };

const char* to_string(IsoVerdict v);

struct IsoOptions {
  std::uint64_t node_budget = 10'000'000;
  std::size_t max_order = 1024;
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undecided;
  std::vector<Element> map;  // G -> H when isomorphic
  std::uint64_t nodes = 0;
};

// Fingerprint filter, then backtracking over images of a generating set
// (minimal for p-groups), pruned by per-element invariant profiles.
// Exhausting the budget yields `undecided`, never `not_isomorphic`.
IsoResult find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const IsoOptions& opts = {});

inline IsoVerdict is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const IsoOptions& opts = {}) {
  return find_isomorphism(g, h, opts).verdict;
}

// Checks that `map` is a bijective homomorphism G -> H.
bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map);

}  // namespace schur
