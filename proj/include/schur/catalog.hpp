#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/calculus.hpp"
#include "schur/group.hpp"
#include "schur/homology.hpp"
#include "schur/isomorphism.hpp"

namespace schur {

enum class PrimeCondition { any, two, odd, three, above_three };

bool holds(PrimeCondition c, std::uint64_t p);
const char* to_string(PrimeCondition c);  // "any", "2", "odd", "3", "p>3"

struct Recipe {
  enum class Kind { presentation, abelian, product, central_product, semidirect };
  Kind kind = Kind::presentation;
  std::string presentation;        // .fp text, possibly using p and $nu
  std::vector<unsigned> exponents;  // abelian: Z_{p^e} factors; semidirect: Jordan type
  std::vector<std::string> factors;
};

struct ExtraspecialInfo {
  unsigned m = 1;
  std::optional<ExtraspecialType> type;  // required when m = 1
};

struct CatalogEntry {
  std::string id;
  std::string source;
  PrimeCondition valid_p = PrimeCondition::any;
  unsigned n = 1;  // order p^n
  Recipe recipe;
  std::optional<unsigned> expected_t;
  std::optional<unsigned> expected_m;
  std::optional<ExtraspecialInfo> extraspecial;

  bool valid_for(std::uint64_t p) const { return holds(valid_p, p); }
  // Relations line of a presentation ("a^4, b^2, (ab)^2"), or a short
  // description of the construction.
  std::string description() const;
};

// Non-abelian t = 4 groups expected in a slice. An item is met when exactly
// one of its candidates has t = 4.
struct ExpectedGroup {
  std::string label;
  std::vector<std::string> one_of;
};

struct Slice {
  PrimeCondition p = PrimeCondition::any;
  unsigned n = 1;
  std::vector<ExpectedGroup> t4;
  bool partial = false;  // only some groups of order p^n are listed
  std::string note;
};

class Catalog {
 public:
  // The data bundled at build time.
  static const Catalog& builtin();
  // file name -> contents; needs "manifest.json" plus every <id>.fp it names.
  static Catalog from_files(const std::map<std::string, std::string>& files);
  static Catalog from_directory(const std::filesystem::path& dir);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  // Throws NotCatalogued.
  const CatalogEntry& entry(std::string_view id) const;
  const CatalogEntry* find(std::string_view id) const;

  bool covers(std::uint64_t p, unsigned n) const;
  // Entries of order p^n valid at p, in manifest order. Throws NotCatalogued
  // when (p, n) is not covered.
  std::vector<const CatalogEntry*> family(std::uint64_t p, unsigned n) const;
  const Slice& slice(std::uint64_t p, unsigned n) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<Slice> slices_;
  std::vector<std::uint64_t> primes_;
};

inline constexpr std::size_t kMaxCatalogOrder = 4096;

struct InstantiateOptions {
  // Defaults to 50 * p^n.
  std::optional<std::size_t> max_cosets;
  // Larger entries throw SizeError instead of building a Cayley table.
  std::size_t max_order = kMaxCatalogOrder;
};

// Throws DomainError if p is not valid for the entry and CatalogError if the
// construction does not close or has the wrong order.
FiniteGroup instantiate(const Catalog& catalog, const CatalogEntry& entry, std::uint64_t p,
                        const InstantiateOptions& opts = {});

struct MatchResult {
  const CatalogEntry* entry = nullptr;  // nullptr: unknown
  bool undecided = false;              // some comparison exhausted its budget
};

// The entry of the (p, n) family isomorphic to g. Throws NotCatalogued when
// |g| = p^n is not covered.
MatchResult match_group(const Catalog& catalog, const FiniteGroup& g, const IsoOptions& opts = {});

// Least quadratic non-residue modulo an odd prime.
std::uint64_t least_nonresidue(std::uint64_t p);

struct VerifyOptions {
  std::size_t homology_cap = kDefaultHomologyCap;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_cosets;
};

struct ReportRow {
  std::string id;
  bool abelian = false;
  unsigned k = 0;  // |G'| = p^k
  std::optional<AbelianInvariants> multiplier;
  std::optional<unsigned> m_g;
  std::optional<unsigned> t;
  std::string method;   // bar-resolution, calculus, both, none
  std::string verdict;  // ok, t4-expected, t4-abelian, t4-unexpected, t4-missing, conflict, unverified
};

struct ClassificationReport {
  std::uint64_t p = 2;
  unsigned n = 1;
  bool partial = false;
  std::vector<ReportRow> rows;
  std::vector<std::string> computed_t4;  // non-abelian ids
  std::vector<std::string> expected_t4;  // labels
  std::vector<std::string> abelian_t4;
  std::vector<std::string> notes;
  std::vector<std::string> anomalies;
  std::string verdict;  // match, mismatch, incomplete

  std::string to_text() const;
  // One "id m_G t method verdict" line per row; unknown values print as "-".
  std::string to_lines() const;
};

// Throws NotCatalogued when (p, n) is not covered.
ClassificationReport verify_classification(const Catalog& catalog, std::uint64_t p, unsigned n,
                                           const VerifyOptions& opts = {});

}  // namespace schur
