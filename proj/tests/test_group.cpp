#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "schur/errors.hpp"
#include "schur/group.hpp"
#include "schur/isomorphism.hpp"

using namespace schur;
using fixtures::cyclic;

namespace {

// Brute force: elements commuting with everything.
std::size_t center_order_oracle(const FiniteGroup& g) {
  std::size_t count = 0;
  for (Element a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Element b = 0; b < g.order(); ++b) ok = ok && g.mul(a, b) == g.mul(b, a);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("direct products") {
  FiniteGroup v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(v4.order() == 4);
  CHECK(structure_predicates(v4).exponent == 2);
  CHECK(abelian_invariants(v4) == AbelianInvariants::from_cyclic({2, 2}));

  FiniteGroup d8 = fixtures::d8();
  CHECK(is_isomorphic(direct_product(d8, FiniteGroup::trivial()), d8) == IsoVerdict::isomorphic);

  FiniteGroup g32 = direct_product(d8, fixtures::elementary(2, 2));
  CHECK(g32.order() == 32);
  CHECK(center(g32).order() == 8);

  CHECK_THROWS_AS(direct_product(cyclic(1000), cyclic(1001)), SizeError);
  CHECK_THROWS_AS(direct_product(cyclic(10), cyclic(10), 50), SizeError);
}

TEST_CASE("center") {
  CHECK(center(cyclic(6)).order() == 6);
  FiniteGroup d8 = fixtures::d8();
  CHECK(center(d8).order() == 2);
  CHECK(center_order_oracle(d8) == 2);
  FiniteGroup e1 = fixtures::e1(3);
  CHECK(e1.order() == 27);
  Subgroup z = center(e1);
  CHECK(z.order() == 3);
  CHECK(z.members == derived_subgroup(e1).members);
  CHECK(z.normal);
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(cyclic(12)).order() == 1);
  CHECK(derived_subgroup(fixtures::q8()).order() == 2);
  // catalog entry thm3.7-10 at p = 3
  FiniteGroup g10 = fixtures::group("gens: a b; rels: a^9 = b^3 = 1, [a,b,a] = 1, [a,b,b] = a^6, [a,b,b,b] = 1;");
  CHECK(g10.order() == 81);
  CHECK(derived_subgroup(g10).order() == 9);
}

TEST_CASE("quotients") {
  FiniteGroup d8 = fixtures::d8();
  Quotient q1 = quotient(d8, Subgroup{{0}, true});
  CHECK(q1.group == d8);
  Quotient q2 = quotient(d8, make_subgroup(d8, [&] {
                           std::vector<Element> all(d8.order());
                           for (Element i = 0; i < all.size(); ++i) all[i] = i;
                           return all;
                         }()));
  CHECK(q2.group.order() == 1);

  // a non-central reflection subgroup of D8 is not normal
  Element b = 0;
  for (Element x = 1; x < d8.order(); ++x)
    if (d8.element_order(x) == 2 && !center(d8).contains(x)) b = x;
  Subgroup refl = generated_subgroup(d8, std::vector<Element>{b});
  CHECK_FALSE(refl.normal);
  CHECK_THROWS_AS(quotient(d8, refl), InvalidGroupError);

  // item (9) at p = 3 has a central Z3 with quotient E1
  FiniteGroup g9 = fixtures::group("gens: a b; rels: a^9, b^3, [a,b,a] = [a,b,b] = 1;");
  REQUIRE(g9.order() == 81);
  bool found = false;
  for (Element z : center(g9).members) {
    if (z == 0 || g9.element_order(z) != 3) continue;
    Quotient q = quotient(g9, generated_subgroup(g9, std::vector<Element>{z}));
    if (is_isomorphic(q.group, fixtures::e1(3)) == IsoVerdict::isomorphic) found = true;
  }
  CHECK(found);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(cyclic(6)) == AbelianInvariants::from_cyclic({6}));
  CHECK(abelianization(cyclic(6)).factors() == std::vector<std::uint64_t>{6});
  CHECK(abelianization(fixtures::q8()) == AbelianInvariants::from_cyclic({2, 2}));
  FiniteGroup g3 = fixtures::group("gens: a b; rels: a^4 = 1, b^4 = 1, [a,b,a] = [a,b,b] = 1, [a,b] = a^2b^2;");
  REQUIRE(g3.order() == 16);
  CHECK(derived_subgroup(g3).order() == 2);
  CHECK(abelianization(g3) == AbelianInvariants::from_cyclic({2, 4}));
}

TEST_CASE("structure predicates") {
  auto z3sq = structure_predicates(fixtures::elementary(3, 2));
  CHECK(z3sq.elementary_abelian);
  CHECK(z3sq.exponent == 3);
  auto e2 = structure_predicates(fixtures::e2(3));
  CHECK(e2.extraspecial);
  CHECK(e2.exponent == 9);
  auto e1 = structure_predicates(fixtures::e1(3));
  CHECK(e1.extraspecial);
  CHECK(e1.exponent == 3);
  auto d8z2 = structure_predicates(direct_product(fixtures::d8(), cyclic(2)));
  CHECK_FALSE(d8z2.extraspecial);
  CHECK(d8z2.center.order() == 4);
  CHECK_FALSE(structure_predicates(cyclic(6)).frattini_order.has_value());
}

TEST_CASE("isomorphism") {
  FiniteGroup d8 = fixtures::d8(), q8 = fixtures::q8();
  auto self = find_isomorphism(d8, d8);
  CHECK(self.verdict == IsoVerdict::isomorphic);
  CHECK(is_isomorphism(d8, d8, self.map));
  CHECK(is_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))) == IsoVerdict::not_isomorphic);
  CHECK(is_isomorphic(d8, q8) == IsoVerdict::not_isomorphic);
  // same group, different presentation
  FiniteGroup d8b = fixtures::group("gens: r s; rels: s^2, r^4, s r s = r^-1;");
  auto r = find_isomorphism(d8b, d8);
  CHECK(r.verdict == IsoVerdict::isomorphic);
  CHECK(is_isomorphism(d8b, d8, r.map));
  // E1 x Z3 vs E2 x Z3: same order, differ
  CHECK(is_isomorphic(direct_product(fixtures::e1(3), cyclic(3)), direct_product(fixtures::e2(3), cyclic(3))) ==
        IsoVerdict::not_isomorphic);
  // a budget of one node cannot finish a nontrivial search
  IsoOptions tiny;
  tiny.node_budget = 1;
  CHECK(is_isomorphic(fixtures::e1(3), fixtures::e1(3), tiny) == IsoVerdict::undecided);
}

TEST_CASE("Cayley table text format") {
  FiniteGroup q8 = fixtures::q8();
  CHECK(FiniteGroup::from_text(q8.to_text()) == q8);
  CHECK_THROWS_AS(FiniteGroup::from_text("2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(FiniteGroup::from_text("2\n0 1\n1 0\n7\n"), ParseError);
  // identity not at 0
  CHECK_THROWS_AS(FiniteGroup::from_text("2\n1 0\n0 1\n"), InvalidGroupError);
  // Latin square but not associative (loop of order 5)
  CHECK_THROWS_AS(FiniteGroup::from_text("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"),
                  InvalidGroupError);
  CHECK_THROWS_AS(FiniteGroup::from_text("2\n0 1\n1 1\n"), InvalidGroupError);
}

TEST_CASE("group invariants hold across a small corpus") {
  std::vector<FiniteGroup> corpus{cyclic(1), cyclic(7), fixtures::d8(), fixtures::q8(), fixtures::e1(3),
                                  fixtures::e2(3), direct_product(fixtures::q8(), cyclic(2)),
                                  direct_product(cyclic(4), cyclic(6))};
  for (const auto& g : corpus) {
    Subgroup z = center(g), d = derived_subgroup(g);
    CHECK(is_normal(g, z));
    CHECK(is_normal(g, d));
    CHECK(quotient(g, d).group.is_abelian());
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(g)) total += cls.size();
    CHECK(total == g.order());
    CHECK(is_isomorphic(g, g) == IsoVerdict::isomorphic);
  }
  for (const auto& g : corpus)
    for (const auto& h : corpus) {
      if (g.order() * h.order() > 2000) continue;
      FiniteGroup gh = direct_product(g, h);
      CHECK(gh.order() == g.order() * h.order());
      CHECK(abelianization(gh) == abelianization(g) + abelianization(h));
      auto fg = structure_predicates(g), fh = structure_predicates(h);
      auto v = is_isomorphic(g, h);
      CHECK(v == is_isomorphic(h, g));
      if (!fg.same_invariants(fh)) CHECK(v == IsoVerdict::not_isomorphic);
    }
}
