#include "schur/coset_enumeration.hpp"

#include <algorithm>
#include <deque>

#include "schur/errors.hpp"

namespace schur {

namespace {

constexpr std::int32_t kUndefined = -1;

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : cols_(2 * generators), max_(max_cosets) {
    add_row();
  }

  std::size_t defined() const { return parent_.size(); }
  bool live(std::int32_t c) const { return parent_[c] == c; }
  std::int32_t& at(std::int32_t c, Letter x) { return table_[std::size_t(c) * cols_ + x]; }
  std::size_t columns() const { return cols_; }

  void define(std::int32_t c, Letter x) {
    std::int32_t d = add_row();
    at(c, x) = d;
    at(d, inverse_letter(x)) = c;
  }

  void scan_and_fill(std::int32_t c, const Word& w) {
    if (w.empty()) return;
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = std::ptrdiff_t(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_letter(w[j])) != kUndefined) b = at(b, inverse_letter(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_letter(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  // Live cosets in order of definition.
  std::vector<std::int32_t> live_cosets() const {
    std::vector<std::int32_t> out;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == std::int32_t(c)) out.push_back(std::int32_t(c));
    return out;
  }

 private:
  std::int32_t add_row() {
    if (parent_.size() >= max_)
      throw EnumerationError("coset enumeration did not close within " + std::to_string(max_) +
                             " cosets (group may be infinite or the budget too small)");
    std::int32_t d = std::int32_t(parent_.size());
    parent_.push_back(d);
    table_.insert(table_.end(), cols_, kUndefined);
    return d;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t g = queue_.front();
      queue_.pop_front();
      for (Letter x = 0; x < cols_; ++x) {
        std::int32_t d = at(g, x);
        if (d == kUndefined) continue;
        at(d, inverse_letter(x)) = kUndefined;
        std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse_letter(x)) != kUndefined) {
          merge(mu, at(nu, inverse_letter(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inverse_letter(x)) = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
};

// Cyclically reduce; conjugate relators generate the same normal subgroup.
Word cyclic_reduce(Word w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == inverse_letter(w[j - 1])) {
    ++i;
    --j;
  }
  return Word(w.begin() + std::ptrdiff_t(i), w.begin() + std::ptrdiff_t(j));
}

}  // namespace

Enumeration enumerate_cosets(const FpPresentation& pres, std::size_t max_cosets,
                             std::optional<std::uint64_t> p) {
  if (max_cosets < 1) throw DomainError("max_cosets must be at least 1");
  const std::size_t ngens = pres.generators().size();
  std::vector<Word> rels;
  for (Word& w : pres.relators(p)) {
    w = cyclic_reduce(std::move(w));
    if (!w.empty()) rels.push_back(std::move(w));
  }
  // short relators first; stable so equal lengths keep source order
  std::stable_sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

  CosetTable t(ngens, max_cosets);
  for (std::int32_t c = 0; std::size_t(c) < t.defined(); ++c) {
    for (const Word& r : rels) {
      if (!t.live(c)) break;
      t.scan_and_fill(c, r);
    }
    if (!t.live(c)) continue;
    for (Letter x = 0; x < t.columns(); ++x)
      if (t.at(c, x) == kUndefined) t.define(c, x);
  }

  const auto live = t.live_cosets();
  const std::size_t n = live.size();
  std::vector<std::int32_t> relabel(t.defined(), -1);
  for (std::size_t i = 0; i < n; ++i) relabel[live[i]] = std::int32_t(i);
  std::vector<std::uint32_t> act(n * t.columns());
  for (std::size_t i = 0; i < n; ++i)
    for (Letter x = 0; x < t.columns(); ++x) act[i * t.columns() + x] = std::uint32_t(relabel[t.at(live[i], x)]);

  // Spanning tree from coset 0: element j = element parent[j] * letter[j].
  std::vector<std::uint32_t> bfs{0}, parent(n, 0);
  std::vector<Letter> via(n, 0);
  std::vector<unsigned char> seen(n);
  seen[0] = 1;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::uint32_t c = bfs[qi];
    for (Letter x = 0; x < t.columns(); ++x) {
      std::uint32_t d = act[c * t.columns() + x];
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = c;
        via[d] = x;
        bfs.push_back(d);
      }
    }
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = Element(i);
    for (std::size_t k = 1; k < n; ++k) {
      std::uint32_t j = bfs[k];
      table[i * n + j] = act[std::size_t(table[i * n + parent[j]]) * t.columns() + via[j]];
    }
  }
  std::vector<Element> gens(ngens);
  for (std::size_t i = 0; i < ngens; ++i) gens[i] = Element(act[make_letter(std::uint32_t(i), false)]);
  return Enumeration{FiniteGroup::from_table(n, std::move(table)), std::move(gens), {t.defined(), n}};
}

FiniteGroup todd_coxeter(const FpPresentation& pres, std::size_t max_cosets, std::optional<std::uint64_t> p) {
  return enumerate_cosets(pres, max_cosets, p).group;
}

Element evaluate_word(const FiniteGroup& g, const std::vector<Element>& images, const Word& w) {
  Element x = g.identity();
  for (Letter l : w) {
    Element s = images.at(letter_generator(l));
    x = g.mul(x, letter_is_inverse(l) ? g.inv(s) : s);
  }
  return x;
}

}  // namespace schur
