#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "schur/group.hpp"
#include "schur/presentation.hpp"

namespace schur {

inline constexpr std::size_t kDefaultMaxCosets = 100'000;

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t index = 0;
};

struct Enumeration {
  FiniteGroup group;
  std::vector<Element> generators;  // image of each presentation generator
  EnumerationStats stats;
};

// HLT coset enumeration over the trivial subgroup with union-find
// coincidence processing. Returns the regular representation of the
// enumerated group; live cosets are numbered in order of first definition,
// so coset 0 is the identity. Throws EnumerationError when more than
// `max_cosets` cosets are needed.
Enumeration enumerate_cosets(const FpPresentation& pres, std::size_t max_cosets = kDefaultMaxCosets,
                             std::optional<std::uint64_t> p = std::nullopt);

FiniteGroup todd_coxeter(const FpPresentation& pres, std::size_t max_cosets = kDefaultMaxCosets,
                         std::optional<std::uint64_t> p = std::nullopt);

// Element of `g` represented by `w`, with generator i sent to `images[i]`.
Element evaluate_word(const FiniteGroup& g, const std::vector<Element>& images, const Word& w);

}  // namespace schur
