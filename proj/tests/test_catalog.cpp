#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "schur/catalog.hpp"
#include "schur/errors.hpp"
#include "schur/number_theory.hpp"
#include "schur/semidirect.hpp"

using namespace schur;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

std::set<std::string> ids(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("family sizes") {
  CHECK(cat().family(2, 3).size() == 5);
  CHECK(cat().family(3, 3).size() == 5);
  CHECK(cat().family(2, 4).size() == 14);
  CHECK(cat().family(3, 4).size() == 15);
  CHECK(cat().family(5, 4).size() == 15);
  CHECK_FALSE(cat().covers(7, 4));
  CHECK_FALSE(cat().covers(2, 7));
  CHECK_THROWS_AS(cat().family(7, 4), NotCatalogued);
  CHECK_THROWS_AS(cat().entry("nope"), NotCatalogued);
}

TEST_CASE("every entry instantiates to its declared order") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& e : cat().entries()) {
      if (!e.valid_for(p) || checked_pow(p, e.n) > kMaxCatalogOrder) continue;
      CAPTURE(e.id);
      CAPTURE(p);
      CHECK(instantiate(cat(), e, p).order() == checked_pow(p, e.n));
    }
  }
}

TEST_CASE("families are pairwise non-isomorphic") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned n = 1; n <= 6; ++n) {
      if (!cat().covers(p, n) || checked_pow(p, n) > 1024) continue;
      const auto family = cat().family(p, n);
      std::vector<FiniteGroup> groups;
      for (const auto* e : family) groups.push_back(instantiate(cat(), *e, p));
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
          CAPTURE(family[i]->id);
          CAPTURE(family[j]->id);
          CHECK(is_isomorphic(groups[i], groups[j]) == IsoVerdict::not_isomorphic);
        }
      }
    }
  }
}

TEST_CASE("entry structure") {
  const FiniteGroup e1 = instantiate(cat(), cat().entry("e1"), 3);
  const GroupFingerprint f = structure_predicates(e1);
  CHECK(e1.order() == 27);
  CHECK(f.extraspecial);
  CHECK(f.exponent == 3);

  const FiniteGroup g10 = instantiate(cat(), cat().entry("thm3.7-10"), 3);
  CHECK(g10.order() == 81);
  CHECK(derived_subgroup(g10).order() == 9);

  const FiniteGroup e4 = instantiate(cat(), cat().entry("thm3.7-5"), 3);
  const Subgroup z = center(e4);
  CHECK(z.order() == 9);
  CHECK(abelian_invariants(subgroup_as_group(e4, z)) == AbelianInvariants::from_cyclic({9}));

  // the same group as a central product with E2 instead of E1
  const FiniteGroup e2 = fixtures::e2(3);
  const Subgroup ze2 = center(e2);
  REQUIRE(ze2.order() == 3);
  const FiniteGroup prod = direct_product(FiniteGroup::cyclic(9), e2);
  const Element gen = static_cast<Element>(3 * e2.order() + e2.inv(ze2.members[1]));
  const FiniteGroup alt = quotient(prod, generated_subgroup(prod, std::vector<Element>{gen})).group;
  CHECK(is_isomorphic(e4, alt) == IsoVerdict::isomorphic);

  CHECK(instantiate(cat(), cat().entry("thm3.7-11"), 5).order() == 625);
  CHECK_THROWS_AS(instantiate(cat(), cat().entry("thm3.7-10"), 5), DomainError);
  CHECK_THROWS_AS(instantiate(cat(), cat().entry("e1xe1"), 5), SizeError);
}

TEST_CASE("descriptions") {
  CHECK(cat().entry("thm3.7-4").description() == "a^2=b^2=c^2=1, abc=bca=cab");
  CHECK(cat().entry("ab-2-1").description() == "Z_{p^2} x Z_p");
  CHECK(cat().entry("thm3.7-1").description() == "d8 x ab-1-1");
}

TEST_CASE("least quadratic non-residue") {
  CHECK(least_nonresidue(3) == 2);
  CHECK(least_nonresidue(5) == 2);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(23) == 5);
  CHECK_THROWS_AS(least_nonresidue(2), DomainError);
}

TEST_CASE("catalog integrity errors") {
  CHECK_THROWS_AS(Catalog::from_files({}), CatalogError);
  const std::string head = R"({"primes": [2, 3], "entries": [)";
  const std::string tail = R"(], "slices": [{"p": "any", "n": 3, "t4": []}]})";
  CHECK_THROWS_AS(Catalog::from_files({{"manifest.json",
                                        head + R"({"id": "x", "n": 3, "valid_p": "any", "recipe": {"kind": "product", "factors": ["y"]}})" + tail}}),
                  CatalogError);
  CHECK_THROWS_AS(Catalog::from_files({{"manifest.json",
                                        head + R"({"id": "x", "n": 3, "valid_p": "any", "recipe": {"kind": "presentation"}})" + tail}}),
                  CatalogError);
  CHECK_THROWS_AS(Catalog::from_files({{"manifest.json", "{"}}), CatalogError);

  const Catalog bad = Catalog::from_files(
      {{"manifest.json", head + R"({"id": "x", "n": 3, "valid_p": "any", "recipe": {"kind": "presentation"}})" + tail},
       {"x.fp", "gens: a b\nrels: a^p, b^p, [a,b]\n"}});
  CHECK(bad.family(3, 3).size() == 1);
  CHECK_THROWS_AS(instantiate(bad, bad.entry("x"), 3), CatalogError);
  CHECK_THROWS_AS(verify_classification(bad, 3, 3), CatalogError);
}

TEST_CASE("catalog directory matches the bundled data") {
  const Catalog dir = Catalog::from_directory(SCHUR_TEST_DATA_DIR "/../../data/catalog");
  REQUIRE(dir.entries().size() == cat().entries().size());
  for (std::size_t i = 0; i < dir.entries().size(); ++i) {
    CHECK(dir.entries()[i].id == cat().entries()[i].id);
    CHECK(dir.entries()[i].description() == cat().entries()[i].description());
  }
}

TEST_CASE("match_group") {
  const MatchResult d8 = match_group(cat(), FiniteGroup::from_text(fixtures::d8().to_text()));
  REQUIRE(d8.entry);
  CHECK(d8.entry->id == "d8");

  const MatchResult ab = match_group(cat(), fixtures::product(fixtures::cyclic(9), fixtures::cyclic(9)));
  REQUIRE(ab.entry);
  CHECK(ab.entry->id == "ab-2-2");

  const MatchResult e1 = match_group(cat(), fixtures::e1(3));
  REQUIRE(e1.entry);
  CHECK(e1.entry->id == "e1");

  std::map<JordanType, std::string> matched;
  for (const auto& c : semidirect_search(3, 4, 3)) {
    const MatchResult m = match_group(cat(), c.group);
    CHECK_FALSE(m.undecided);
    matched[c.jordan_type] = m.entry ? m.entry->id : "unknown";
  }
  CHECK(matched == std::map<JordanType, std::string>{
                       {{2, 1, 1}, "e1xzp^2"}, {{2, 2}, "sdp-2-2"}, {{3, 1}, "sdp-3-1"}});

  CHECK_THROWS_AS(match_group(cat(), FiniteGroup::cyclic(6)), NotCatalogued);
  CHECK_THROWS_AS(match_group(cat(), FiniteGroup::cyclic(7)), NotCatalogued);
}

TEST_CASE("unipotent semidirect products") {
  CHECK(unipotent_jordan_types(3, 4) == std::vector<JordanType>{{3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(unipotent_jordan_types(5, 4) == std::vector<JordanType>{{4}, {3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(unipotent_jordan_types(3, 2) == std::vector<JordanType>{{2}});

  const JordanType two{2};
  const FiniteGroup g = unipotent_semidirect_product(3, two);
  CHECK(g.order() == 27);
  CHECK(is_isomorphic(g, fixtures::e1(3)) == IsoVerdict::isomorphic);

  const JordanType ones{1, 1};
  const FiniteGroup a = unipotent_semidirect_product(3, ones);
  CHECK(a.is_abelian());
  CHECK(abelian_invariants(a) == AbelianInvariants::from_cyclic({3, 3, 3}));

  for (const auto& c : semidirect_search(3, 4, 3)) {
    CAPTURE(c.jordan_type.size());
    CHECK(c.group.order() == 243);
    CHECK_FALSE(c.group.is_abelian());
  }
  CHECK_THROWS_AS(semidirect_search(2, 4, 2), DomainError);
  CHECK_THROWS_AS(semidirect_search(3, 4, 9), DomainError);
  CHECK_THROWS_AS(semidirect_search(3, 4, 3, 100), SizeError);
}

TEST_CASE("classification slices") {
  const auto r24 = verify_classification(cat(), 2, 4);
  CHECK(r24.verdict == "match");
  CHECK(ids(r24.computed_t4) == std::set<std::string>{"thm3.7-2", "thm3.7-3", "thm3.7-4"});
  CHECK(ids(r24.abelian_t4) == std::set<std::string>{"ab-2-2"});
  CHECK(r24.anomalies.empty());

  const auto r25 = verify_classification(cat(), 2, 5);
  CHECK(r25.verdict == "match");
  CHECK(ids(r25.computed_t4) == std::set<std::string>{"thm3.7-1"});

  const auto r34 = verify_classification(cat(), 3, 4);
  CHECK(r34.verdict == "match");
  CHECK(ids(r34.computed_t4) == std::set<std::string>{"thm3.7-5", "thm3.7-8", "thm3.7-9", "thm3.7-10"});
  CHECK(r34.anomalies.empty());

  const auto r36 = verify_classification(cat(), 3, 6);
  CHECK(r36.verdict == "match");
  CHECK(ids(r36.computed_t4) == std::set<std::string>{"thm3.7-6"});
  for (const auto& row : r36.rows) CHECK(row.method == "calculus");

  const auto r35 = verify_classification(cat(), 3, 5);
  CHECK(r35.verdict == "incomplete");

  CHECK_THROWS_AS(verify_classification(cat(), 7, 4), NotCatalogued);
}

TEST_CASE("reports are deterministic") {
  VerifyOptions a, b;
  b.seed = 12345;
  const auto ra = verify_classification(cat(), 2, 4, a);
  const auto rb = verify_classification(cat(), 2, 4, b);
  CHECK(ra.to_text() == rb.to_text());
  CHECK(ra.to_lines() == rb.to_lines());
  CHECK(ra.to_lines().find("thm3.7-4 2 4 bar-resolution t4-expected\n") != std::string::npos);
}
