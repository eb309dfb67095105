#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

// Letter encoding: 2 * generator for g, 2 * generator + 1 for g^-1.
using Letter = std::uint32_t;

inline constexpr Letter make_letter(std::uint32_t generator, bool inverse) {
  return 2 * generator + (inverse ? 1 : 0);
}
inline constexpr Letter inverse_letter(Letter l) { return l ^ 1u; }
inline constexpr std::uint32_t letter_generator(Letter l) { return l >> 1; }
inline constexpr bool letter_is_inverse(Letter l) { return l & 1u; }

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// Left-normed: [x, y] = x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);
Word power(const Word& w, std::int64_t k);
std::string to_string(const Word& w, const std::vector<std::string>& names);

namespace detail {
struct ExponentNode;
struct WordNode;
}  // namespace detail

// One side-pair of a relation as written, e.g. "[a,b] = a^2b^2" -> lhs, rhs.
// A relator is lhs * rhs^-1; rhs is empty when it is the identity.
struct RelationTemplate {
  std::shared_ptr<const detail::WordNode> lhs;
  std::shared_ptr<const detail::WordNode> rhs;
  std::string text;  // source of the whole relation chain this came from
};

// A finite presentation, possibly a template in a prime p.
class FpPresentation {
 public:
  FpPresentation() = default;
  FpPresentation(std::vector<std::string> generators, std::vector<RelationTemplate> relations,
                 std::optional<std::uint64_t> p, bool uses_p, std::string source);

  // From concrete words.
  static FpPresentation from_words(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::size_t relator_count() const noexcept { return relations_.size() + fixed_.size(); }
  // p from a "p:" header, if any.
  std::optional<std::uint64_t> declared_p() const noexcept { return p_; }
  bool uses_p() const noexcept { return uses_p_; }
  const std::string& source() const noexcept { return source_; }
  // Relation texts as written, one per source relation chain.
  std::vector<std::string> relation_texts() const;

  // Freely reduced relators. `p` overrides the declared p; a template with
  // no p available throws DomainError, as does a non-prime p.
  std::vector<Word> relators(std::optional<std::uint64_t> p = std::nullopt) const;

  // Same presentation with p fixed.
  FpPresentation instantiate(std::uint64_t p) const;

 private:
  std::vector<std::string> generators_;
  std::vector<RelationTemplate> relations_;
  std::vector<Word> fixed_;  // used when built from words
  std::optional<std::uint64_t> p_;
  bool uses_p_ = false;
  std::string source_;
};

// DSL:
//   # comment
//   p: 3
//   gens: a b;
//   rels: a^9 = 1, [a,b,a] = 1, [a,b,b] = a^6;
// Juxtaposition multiplies, [x,y,z] = [[x,y],z], exponents are integers,
// p, or a parenthesized/braced expression in p such as a^(p^2).
// Chains u = v = w give consecutive relators; in a chain that contains the
// literal 1, every other term becomes its own relator.
FpPresentation parse_presentation(std::string_view text);

}  // namespace schur
