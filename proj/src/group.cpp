#include "schur/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "schur/errors.hpp"
#include "schur/number_theory.hpp"

namespace schur {

namespace {

constexpr std::size_t kFullAssociativityLimit = 256;
constexpr std::size_t kRandomTriples = 100'000;

}  // namespace

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> table)
    : n_(n), table_(std::move(table)), inverse_(n, 0) {}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table) {
  if (order == 0) throw InvalidGroupError("group order must be positive");
  if (table.size() != order * order)
    throw InvalidGroupError("Cayley table has " + std::to_string(table.size()) +
                            " entries, expected " + std::to_string(order * order));
  FiniteGroup g(order, std::move(table));
  g.validate();
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table(1, {0}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = Element((i + j) % n);
  return from_table(n, std::move(t));
}

void FiniteGroup::validate() {
  const std::size_t n = n_;
  for (Element x : table_)
    if (x >= n) throw InvalidGroupError("table entry out of range");
  // Latin square.
  std::vector<unsigned char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i * n + j]]++) throw InvalidGroupError("row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[j * n + i]]++) throw InvalidGroupError("column " + std::to_string(i) + " is not a permutation");
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (table_[j] != j || table_[j * n] != j) throw InvalidGroupError("element 0 is not the identity");
  for (std::size_t i = 0; i < n; ++i) {
    const Element* r = table_.data() + i * n;
    inverse_[i] = Element(std::find(r, r + n, Element(0)) - r);
    if (table_[std::size_t(inverse_[i]) * n + i] != 0)
      throw InvalidGroupError("left and right inverses differ");
  }
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (mul(mul(Element(a), Element(b)), Element(c)) != mul(Element(a), mul(Element(b), Element(c))))
      throw InvalidGroupError("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
                              ", " + std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b)
        for (std::size_t c = 1; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < kRandomTriples; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup FiniteGroup::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw ParseError("expected a positive group order", 1, 1);
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v;
    if (!(in >> v))
      throw ParseError("expected " + std::to_string(n * n) + " table entries", 2 + i / n, 1 + i % n);
    if (v < 0 || std::size_t(v) >= n) throw ParseError("entry out of range", 2 + i / n, 1 + i % n);
    t[i] = Element(v);
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after table", n + 2, 1);
  return from_table(n, std::move(t));
}

std::string FiniteGroup::to_text() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out << (j ? " " : "") << table_[i * n_ + j];
    out << '\n';
  }
  return out.str();
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = 0;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::element_order(Element a) const {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint64_t> FiniteGroup::element_orders() const {
  std::vector<std::uint64_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = element_order(Element(i));
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
  return true;
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

// Closure of `start` under right multiplication by `gens`. In a finite group
// that is the generated subgroup.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens,
                             std::vector<unsigned char>& in) {
  std::vector<Element> members;
  std::deque<Element> queue;
  auto visit = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  visit(0);
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) visit(g.mul(x, s));
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<unsigned char> in(g.order());
  Subgroup h{closure(g, gens, in), false};
  h.normal = is_normal(g, h);
  return h;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<Element> all;
  for (Element x : gens)
    for (std::size_t y = 0; y < g.order(); ++y) all.push_back(g.conjugate(x, Element(y)));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<unsigned char> in(g.order());
  return Subgroup{closure(g, all, in), true};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  std::vector<unsigned char> in(g.order());
  for (Element x : h.members) in[x] = 1;
  for (Element x : h.members)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!in[g.conjugate(x, Element(y))]) return false;
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw InvalidGroupError("subgroup must contain the identity");
  if (members.back() >= g.order()) throw InvalidGroupError("subgroup member out of range");
  std::vector<unsigned char> in(g.order());
  for (Element x : members) in[x] = 1;
  for (Element a : members) {
    if (!in[g.inv(a)]) throw InvalidGroupError("subgroup not closed under inverses");
    for (Element b : members)
      if (!in[g.mul(a, b)]) throw InvalidGroupError("subgroup not closed under multiplication");
  }
  Subgroup h{std::move(members), false};
  h.normal = is_normal(g, h);
  return h;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      central = g.mul(Element(a), Element(b)) == g.mul(Element(b), Element(a));
    if (central) z.push_back(Element(a));
  }
  return Subgroup{std::move(z), true};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<unsigned char> is_comm(g.order());
  std::vector<Element> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      Element c = g.commutator(Element(a), Element(b));
      if (!is_comm[c]) {
        is_comm[c] = 1;
        comms.push_back(c);
      }
    }
  std::vector<unsigned char> in(g.order());
  // The set of commutators is closed under conjugation, so its closure is normal.
  return Subgroup{closure(g, comms, in), true};
}

std::optional<Subgroup> frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup{{0}, true};
  auto pp = as_prime_power(g.order());
  if (!pp) return std::nullopt;
  Subgroup d = derived_subgroup(g);
  std::vector<Element> gens = d.members;
  for (std::size_t a = 0; a < g.order(); ++a) gens.push_back(g.pow(Element(a), std::int64_t(pp->p)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<unsigned char> in(g.order());
  return Subgroup{closure(g, gens, in), true};
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t m = h.order();
  std::vector<Element> index(g.order(), Element(-1));
  for (std::size_t i = 0; i < m; ++i) index[h.members[i]] = Element(i);
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element prod = index[g.mul(h.members[i], h.members[j])];
      if (prod == Element(-1)) throw InvalidGroupError("subgroup not closed under multiplication");
      t[i * m + j] = prod;
    }
  return FiniteGroup::from_table(m, std::move(t));
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InvalidGroupError("quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  std::vector<Element> coset(order, Element(-1));
  std::vector<Element> reps;
  for (std::size_t a = 0; a < order; ++a) {
    if (coset[a] != Element(-1)) continue;
    Element id = Element(reps.size());
    reps.push_back(Element(a));
    for (Element x : n.members) coset[g.mul(Element(a), x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = coset[g.mul(reps[i], reps[j])];
  return Quotient{FiniteGroup::from_table(m, std::move(t)), std::move(coset)};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t max_order) {
  const std::size_t a = g.order(), b = h.order();
  std::size_t n;
  if (__builtin_mul_overflow(a, b, &n) || n > max_order)
    throw SizeError("direct product of orders " + std::to_string(a) + " and " + std::to_string(b) +
                    " exceeds the order cap " + std::to_string(max_order));
  std::vector<Element> t(n * n);
  for (std::size_t i1 = 0; i1 < a; ++i1)
    for (std::size_t j1 = 0; j1 < b; ++j1) {
      std::size_t row = (i1 * b + j1) * n;
      for (std::size_t i2 = 0; i2 < a; ++i2) {
        std::size_t hi = std::size_t(g.mul(Element(i1), Element(i2))) * b;
        for (std::size_t j2 = 0; j2 < b; ++j2)
          t[row + i2 * b + j2] = Element(hi + h.mul(Element(j1), Element(j2)));
      }
    }
  return FiniteGroup::from_table(n, std::move(t));
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DomainError("abelian_invariants needs an abelian group");
  const auto orders = g.element_orders();
  std::vector<std::uint64_t> cyclic;
  for (auto [p, e] : factorize(g.order())) {
    // c[i] = log_p #{x : x^(p^i) = 1} = sum_j min(a_j, i)
    std::vector<unsigned> c(e + 1, 0);
    std::uint64_t pi = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pi *= p;
      std::size_t count = 0;
      for (std::uint64_t o : orders)
        if (pi % o == 0) ++count;
      c[i] = as_prime_power(count) ? as_prime_power(count)->exponent : 0;
    }
    // r[i] = number of cyclic p-factors of order >= p^i
    std::vector<unsigned> r(e + 2, 0);
    for (unsigned i = 1; i <= e; ++i) r[i] = c[i] - c[i - 1];
    for (unsigned i = 1; i <= e; ++i)
      for (unsigned k = 0; k < r[i] - r[i + 1]; ++k) cyclic.push_back(checked_pow(p, i));
  }
  auto out = AbelianInvariants::from_cyclic(cyclic);
  if (out.order() != g.order()) throw ConsistencyError("abelian decomposition lost elements");
  return out;
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  return abelian_invariants(quotient(g, derived_subgroup(g)).group);
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<unsigned char> done(g.order());
  std::vector<std::vector<Element>> classes;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (std::size_t b = 0; b < g.order(); ++b) {
      Element c = g.conjugate(Element(a), Element(b));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> generating_set(const FiniteGroup& g, std::span<const Element> preference) {
  std::vector<Element> order;
  order.reserve(g.order() + preference.size());
  order.insert(order.end(), preference.begin(), preference.end());
  for (std::size_t a = 1; a < g.order(); ++a) order.push_back(Element(a));

  std::vector<Element> gens;
  std::vector<unsigned char> in(g.order());
  std::vector<Element> base;
  if (auto phi = frattini_subgroup(g)) base = phi->members;
  auto rebuild = [&] {
    std::vector<Element> all = base;
    all.insert(all.end(), gens.begin(), gens.end());
    std::fill(in.begin(), in.end(), 0);
    closure(g, all, in);
  };
  rebuild();
  for (Element x : order) {
    if (in[x]) continue;
    gens.push_back(x);
    rebuild();
  }
  return gens;
}

GroupFingerprint structure_predicates(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.abelianization = abelianization(g);
  Subgroup z = center(g);
  f.center = abelian_invariants(subgroup_as_group(g, z));
  Subgroup d = derived_subgroup(g);
  f.derived_order = d.order();
  for (auto o : g.element_orders()) {
    f.order_statistics[o]++;
    f.exponent = std::max(f.exponent, o);
  }
  for (const auto& cls : conjugacy_classes(g)) f.class_sizes.push_back(cls.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  auto pp = as_prime_power(g.order());
  f.elementary_abelian = f.abelian && pp && f.exponent == pp->p;
  if (auto phi = frattini_subgroup(g)) {
    f.frattini_order = phi->order();
    f.extraspecial = pp && z.order() == pp->p && z.members == d.members && z.members == phi->members;
  }
  return f;
}

}  // namespace schur
