#include "schur/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "schur/errors.hpp"
#include "schur/number_theory.hpp"

namespace schur {

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::not_isomorphic: return "not isomorphic";
    case IsoVerdict::undecided: return "undecided";
  }
  return "?";
}

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<unsigned char> hit(h.order());
  for (Element x : map) {
    if (x >= h.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(Element(a), Element(b))] != h.mul(map[a], map[b])) return false;
  return true;
}

namespace {

// Isomorphism-invariant label of a single element.
using Profile = std::tuple<std::uint64_t, std::size_t, bool, bool, bool, std::size_t>;

std::vector<Profile> element_profiles(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto orders = g.element_orders();
  std::vector<std::size_t> class_size(n);
  for (const auto& cls : conjugacy_classes(g))
    for (Element x : cls) class_size[x] = cls.size();
  Subgroup z = center(g), d = derived_subgroup(g);
  std::vector<unsigned char> in_phi(n);
  if (auto phi = frattini_subgroup(g))
    for (Element x : phi->members) in_phi[x] = 1;
  // number of square roots (or p-th roots for p-groups)
  std::int64_t root_power = 2;
  if (auto pp = as_prime_power(n)) root_power = std::int64_t(pp->p);
  std::vector<std::size_t> roots(n);
  for (std::size_t a = 0; a < n; ++a) roots[g.pow(Element(a), root_power)]++;
  std::vector<Profile> out(n);
  for (std::size_t a = 0; a < n; ++a)
    out[a] = {orders[a], class_size[a], z.contains(Element(a)), d.contains(Element(a)), bool(in_phi[a]),
              roots[a]};
  return out;
}

class Search {
 public:
  Search(const FiniteGroup& g, const FiniteGroup& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), pg_(element_profiles(g)), ph_(element_profiles(h)) {}

  IsoResult run() {
    IsoResult res;
    std::map<Profile, std::size_t> count_g, count_h;
    for (auto& p : pg_) count_g[p]++;
    for (auto& p : ph_) count_h[p]++;
    if (count_g != count_h) {
      res.verdict = IsoVerdict::not_isomorphic;
      return res;
    }
    // Prefer generators whose profile is rare: fewer candidate images.
    std::vector<Element> pref(g_.order() > 0 ? g_.order() - 1 : 0);
    for (std::size_t i = 0; i < pref.size(); ++i) pref[i] = Element(i + 1);
    std::stable_sort(pref.begin(), pref.end(),
                     [&](Element a, Element b) { return count_h[pg_[a]] < count_h[pg_[b]]; });
    gens_ = generating_set(g_, pref);
    for (Element s : gens_) {
      std::vector<Element> cands;
      for (std::size_t y = 0; y < h_.order(); ++y)
        if (ph_[y] == pg_[s]) cands.push_back(Element(y));
      candidates_.push_back(std::move(cands));
    }
    phi_.assign(g_.order(), kUnset);
    used_.assign(h_.order(), 0);
    phi_[0] = 0;
    used_[0] = 1;
    images_.assign(gens_.size(), 0);
    bool found = g_.order() == 1 || extend(0);
    res.nodes = nodes_;
    if (found) {
      res.verdict = IsoVerdict::isomorphic;
      res.map = phi_;
    } else {
      res.verdict = exhausted_ ? IsoVerdict::undecided : IsoVerdict::not_isomorphic;
    }
    return res;
  }

 private:
  static constexpr Element kUnset = Element(-1);

  bool extend(std::size_t level) {
    if (level == gens_.size()) return true;
    for (Element y : candidates_[level]) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      Element s = gens_[level];
      if (phi_[s] != kUnset && phi_[s] != y) continue;
      images_[level] = y;
      std::size_t mark = trail_.size();
      if (propagate(level) && extend(level + 1)) return true;
      undo(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  // Extends phi over <gens_[0..level]> through right multiplication by the
  // generators, failing on any conflict.
  bool propagate(std::size_t level) {
    std::vector<Element> queue;
    for (std::size_t x = 0; x < g_.order(); ++x)
      if (phi_[x] != kUnset) queue.push_back(Element(x));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Element x = queue[qi];
      for (std::size_t j = 0; j <= level; ++j) {
        Element gx = g_.mul(x, gens_[j]);
        Element hx = h_.mul(phi_[x], images_[j]);
        if (phi_[gx] == kUnset) {
          if (used_[hx] || pg_[gx] != ph_[hx]) return false;
          phi_[gx] = hx;
          used_[hx] = 1;
          trail_.push_back(gx);
          queue.push_back(gx);
        } else if (phi_[gx] != hx) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Element x = trail_.back();
      trail_.pop_back();
      used_[phi_[x]] = 0;
      phi_[x] = kUnset;
    }
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::uint64_t budget_;
  std::vector<Profile> pg_, ph_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> phi_;
  std::vector<unsigned char> used_;
  std::vector<Element> images_;
  std::vector<Element> trail_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

IsoResult find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const IsoOptions& opts) {
  if (g.order() > opts.max_order || h.order() > opts.max_order)
    throw SizeError("isomorphism test limited to order " + std::to_string(opts.max_order));
  IsoResult res;
  if (g.order() != h.order() || !structure_predicates(g).same_invariants(structure_predicates(h))) {
    res.verdict = IsoVerdict::not_isomorphic;
    return res;
  }
  return Search(g, h, opts.node_budget).run();
}

}  // namespace schur
