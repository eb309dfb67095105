#include "schur/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "schur/coset_enumeration.hpp"
#include "schur/errors.hpp"
#include "schur/number_theory.hpp"
#include "schur/presentation.hpp"
#include "schur/semidirect.hpp"

namespace schur {

namespace detail {
const std::map<std::string, std::string>& bundled_catalog_files();
}

bool holds(PrimeCondition c, std::uint64_t p) {
  if (!is_prime(p)) return false;
  switch (c) {
    case PrimeCondition::any: return true;
    case PrimeCondition::two: return p == 2;
    case PrimeCondition::odd: return p != 2;
    case PrimeCondition::three: return p == 3;
    case PrimeCondition::above_three: return p > 3;
  }
  return false;
}

const char* to_string(PrimeCondition c) {
  switch (c) {
    case PrimeCondition::any: return "any";
    case PrimeCondition::two: return "2";
    case PrimeCondition::odd: return "odd";
    case PrimeCondition::three: return "3";
    case PrimeCondition::above_three: return "p>3";
  }
  return "?";
}

namespace {

using nlohmann::json;

PrimeCondition parse_condition(const std::string& s) {
  if (s == "any") return PrimeCondition::any;
  if (s == "2") return PrimeCondition::two;
  if (s == "odd") return PrimeCondition::odd;
  if (s == "3") return PrimeCondition::three;
  if (s == "p>3") return PrimeCondition::above_three;
  throw CatalogError("unknown prime condition '" + s + "'");
}

ExtraspecialType parse_type(const std::string& s) {
  if (s == "dihedral") return ExtraspecialType::dihedral;
  if (s == "quaternion") return ExtraspecialType::quaternion;
  if (s == "exponent_p") return ExtraspecialType::exponent_p;
  if (s == "exponent_p2") return ExtraspecialType::exponent_p2;
  throw CatalogError("unknown extraspecial type '" + s + "'");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n;");
  return std::string(s.substr(b, e - b + 1));
}

std::string cyclic_name(unsigned e) { return e == 1 ? "Z_p" : "Z_{p^" + std::to_string(e) + "}"; }

unsigned log_p(std::uint64_t value, std::uint64_t p) {
  unsigned e = 0;
  while (value > 1) {
    if (value % p) throw ConsistencyError(std::to_string(value) + " is not a power of " + std::to_string(p));
    value /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::string CatalogEntry::description() const {
  switch (recipe.kind) {
    case Recipe::Kind::presentation: {
      std::vector<std::string> rels;
      std::istringstream in(recipe.presentation);
      std::string line;
      while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto t = trim(line);
        if (t.rfind("rels:", 0) == 0) rels.push_back(trim(std::string_view(t).substr(5)));
      }
      return join(rels, ", ");
    }
    case Recipe::Kind::abelian: {
      std::vector<std::string> parts;
      for (unsigned e : recipe.exponents) parts.push_back(cyclic_name(e));
      return join(parts, " x ");
    }
    case Recipe::Kind::product: return join(recipe.factors, " x ");
    case Recipe::Kind::central_product: return "Z_{p^2} * e1, central product over the center";
    case Recipe::Kind::semidirect: {
      std::vector<std::string> parts;
      for (unsigned e : recipe.exponents) parts.push_back(std::to_string(e));
      unsigned rank = 0;
      for (unsigned e : recipe.exponents) rank += e;
      return "Z_p^" + std::to_string(rank) + " x| Z_p, unipotent action with Jordan type (" + join(parts, ",") + ")";
    }
  }
  return {};
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_files(detail::bundled_catalog_files());
  return catalog;
}

Catalog Catalog::from_directory(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  std::error_code ec;
  for (const auto& item : std::filesystem::directory_iterator(dir, ec)) {
    const auto name = item.path().filename().string();
    if (item.path().extension() != ".fp" && name != "manifest.json") continue;
    std::ifstream in(item.path());
    std::ostringstream text;
    text << in.rdbuf();
    files[name] = text.str();
  }
  if (ec) throw CatalogError("cannot read catalog directory " + dir.string() + ": " + ec.message());
  return from_files(files);
}

Catalog Catalog::from_files(const std::map<std::string, std::string>& files) {
  const auto manifest = files.find("manifest.json");
  if (manifest == files.end()) throw CatalogError("catalog has no manifest.json");
  Catalog c;
  try {
    const json doc = json::parse(manifest->second);
    for (const auto& p : doc.at("primes")) c.primes_.push_back(p.get<std::uint64_t>());
    for (const auto& e : doc.at("entries")) {
      CatalogEntry entry;
      entry.id = e.at("id").get<std::string>();
      entry.n = e.at("n").get<unsigned>();
      entry.valid_p = parse_condition(e.at("valid_p").get<std::string>());
      entry.source = e.value("source", "");
      const auto& r = e.at("recipe");
      const auto kind = r.at("kind").get<std::string>();
      if (kind == "presentation") {
        entry.recipe.kind = Recipe::Kind::presentation;
        const auto fp = files.find(entry.id + ".fp");
        if (fp == files.end()) throw CatalogError("missing presentation file " + entry.id + ".fp");
        entry.recipe.presentation = fp->second;
      } else if (kind == "abelian") {
        entry.recipe.kind = Recipe::Kind::abelian;
        entry.recipe.exponents = r.at("exponents").get<std::vector<unsigned>>();
      } else if (kind == "product") {
        entry.recipe.kind = Recipe::Kind::product;
        entry.recipe.factors = r.at("factors").get<std::vector<std::string>>();
      } else if (kind == "central_product") {
        entry.recipe.kind = Recipe::Kind::central_product;
      } else if (kind == "semidirect") {
        entry.recipe.kind = Recipe::Kind::semidirect;
        entry.recipe.exponents = r.at("jordan_type").get<std::vector<unsigned>>();
      } else {
        throw CatalogError("entry " + entry.id + ": unknown recipe kind '" + kind + "'");
      }
      if (e.contains("expected_t")) entry.expected_t = e["expected_t"].get<unsigned>();
      if (e.contains("expected_m")) entry.expected_m = e["expected_m"].get<unsigned>();
      if (e.contains("extraspecial")) {
        const auto& x = e["extraspecial"];
        ExtraspecialInfo info;
        info.m = x.at("m").get<unsigned>();
        if (x.contains("type")) info.type = parse_type(x["type"].get<std::string>());
        if (info.m == 1 && !info.type) throw CatalogError("entry " + entry.id + ": extraspecial of order p^3 needs a type");
        if (entry.n != 2 * info.m + 1) throw CatalogError("entry " + entry.id + ": extraspecial m does not match n");
        entry.extraspecial = info;
      }
      if (c.find(entry.id)) throw CatalogError("duplicate catalog id " + entry.id);
      c.entries_.push_back(std::move(entry));
    }
    for (const auto& s : doc.at("slices")) {
      Slice slice;
      slice.p = parse_condition(s.at("p").get<std::string>());
      slice.n = s.at("n").get<unsigned>();
      slice.partial = s.value("partial", false);
      slice.note = s.value("note", "");
      for (const auto& t : s.at("t4")) {
        ExpectedGroup g;
        g.label = t.at("label").get<std::string>();
        g.one_of = t.at("one_of").get<std::vector<std::string>>();
        slice.t4.push_back(std::move(g));
      }
      c.slices_.push_back(std::move(slice));
    }
  } catch (const json::exception& e) {
    throw CatalogError(std::string("malformed catalog manifest: ") + e.what());
  }

  for (const auto& e : c.entries_) {
    if (e.recipe.kind != Recipe::Kind::product) continue;
    unsigned n = 0;
    for (const auto& f : e.recipe.factors) {
      const CatalogEntry* factor = c.find(f);
      if (!factor) throw CatalogError("entry " + e.id + ": unknown factor " + f);
      n += factor->n;
    }
    if (n != e.n) throw CatalogError("entry " + e.id + ": factor orders do not multiply to p^" + std::to_string(e.n));
  }
  for (const auto& s : c.slices_) {
    for (const auto& g : s.t4) {
      for (const auto& id : g.one_of) {
        if (!c.find(id)) throw CatalogError("slice expectation names unknown entry " + id);
      }
    }
  }
  return c;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
  const CatalogEntry* e = find(id);
  if (!e) throw NotCatalogued("no catalog entry '" + std::string(id) + "'");
  return *e;
}

bool Catalog::covers(std::uint64_t p, unsigned n) const {
  if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) return false;
  return std::any_of(slices_.begin(), slices_.end(), [&](const Slice& s) { return s.n == n && holds(s.p, p); });
}

const Slice& Catalog::slice(std::uint64_t p, unsigned n) const {
  if (!covers(p, n)) {
    throw NotCatalogued("groups of order " + std::to_string(p) + "^" + std::to_string(n) + " are not catalogued");
  }
  return *std::find_if(slices_.begin(), slices_.end(), [&](const Slice& s) { return s.n == n && holds(s.p, p); });
}

std::vector<const CatalogEntry*> Catalog::family(std::uint64_t p, unsigned n) const {
  slice(p, n);
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.n == n && e.valid_for(p)) out.push_back(&e);
  }
  return out;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("quadratic non-residues need an odd prime, got " + std::to_string(p));
  for (std::uint64_t nu = 2; nu < p; ++nu) {
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) x = x * nu % p;
    if (x == p - 1) return nu;
  }
  throw ConsistencyError("no quadratic non-residue mod " + std::to_string(p));
}

FiniteGroup instantiate(const Catalog& catalog, const CatalogEntry& entry, std::uint64_t p,
                        const InstantiateOptions& opts) {
  if (!entry.valid_for(p)) {
    throw DomainError("entry " + entry.id + " is not defined for p = " + std::to_string(p) + " (valid p: " +
                      to_string(entry.valid_p) + ")");
  }
  const std::uint64_t order = checked_pow(p, entry.n);
  if (order > opts.max_order) {
    throw SizeError("entry " + entry.id + " at p = " + std::to_string(p) + " has order " + std::to_string(order) +
                    ", above the instantiation limit " + std::to_string(opts.max_order));
  }
  const std::string where = "entry " + entry.id + " at p = " + std::to_string(p);

  FiniteGroup g = FiniteGroup::trivial();
  switch (entry.recipe.kind) {
    case Recipe::Kind::presentation: {
      std::string text = entry.recipe.presentation;
      for (auto pos = text.find("$nu"); pos != std::string::npos; pos = text.find("$nu")) {
        text.replace(pos, 3, std::to_string(least_nonresidue(p)));
      }
      const FpPresentation pres = parse_presentation(text);
      const std::size_t budget = opts.max_cosets.value_or(50 * order);
      try {
        g = todd_coxeter(pres, budget, p);
      } catch (const EnumerationError& e) {
        throw CatalogError(where + ": coset enumeration did not close within " + std::to_string(budget) + " cosets");
      }
      break;
    }
    case Recipe::Kind::abelian:
      for (unsigned e : entry.recipe.exponents) g = direct_product(g, FiniteGroup::cyclic(checked_pow(p, e)));
      break;
    case Recipe::Kind::product:
      for (const auto& f : entry.recipe.factors) {
        g = direct_product(g, instantiate(catalog, catalog.entry(f), p, opts));
      }
      break;
    case Recipe::Kind::central_product: {
      // (Z_{p^2} x E1) / <(z, c^-1)> with z of order p and c generating Z(E1)
      const CatalogEntry* e1 = catalog.find("e1");
      if (!e1) throw CatalogError(where + ": the central product needs entry e1");
      const FiniteGroup e = instantiate(catalog, *e1, p, opts);
      const Subgroup z = center(e);
      if (z.order() != p) throw CatalogError(where + ": e1 does not have a center of order p");
      const Element c = z.members[1];
      const FiniteGroup cyc = FiniteGroup::cyclic(p * p);
      const FiniteGroup prod = direct_product(cyc, e);
      const Element gen = static_cast<Element>(p * e.order() + e.inv(c));
      g = quotient(prod, generated_subgroup(prod, std::vector<Element>{gen})).group;
      break;
    }
    case Recipe::Kind::semidirect:
      g = unipotent_semidirect_product(p, entry.recipe.exponents, opts.max_order);
      break;
  }
  if (g.order() != order) {
    throw CatalogError(where + " has order " + std::to_string(g.order()) + ", expected " + std::to_string(order));
  }
  return g;
}

MatchResult match_group(const Catalog& catalog, const FiniteGroup& g, const IsoOptions& opts) {
  const auto pp = as_prime_power(g.order());
  if (!pp) throw NotCatalogued("the catalog only holds groups of prime-power order, got order " + std::to_string(g.order()));
  MatchResult result;
  const GroupFingerprint fp = structure_predicates(g);
  for (const CatalogEntry* e : catalog.family(pp->p, pp->exponent)) {
    const FiniteGroup h = instantiate(catalog, *e, pp->p);
    if (!fp.same_invariants(structure_predicates(h))) continue;
    const IsoVerdict v = is_isomorphic(g, h, opts);
    if (v == IsoVerdict::isomorphic) {
      result.entry = e;
      result.undecided = false;
      return result;
    }
    if (v == IsoVerdict::undecided) result.undecided = true;
  }
  return result;
}

namespace {

struct Evaluation {
  bool abelian = false;
  unsigned k = 0;
  AbelianInvariants ab;
  std::optional<AbelianInvariants> multiplier;
  std::optional<unsigned> m;
  std::string method = "none";
  std::string conflict;
};

class Evaluator {
 public:
  Evaluator(const Catalog& catalog, std::uint64_t p, const VerifyOptions& opts) : catalog_(catalog), p_(p), opts_(opts) {}

  const Evaluation& operator()(const CatalogEntry& e) {
    if (auto it = memo_.find(e.id); it != memo_.end()) return it->second;
    Evaluation ev = evaluate(e);
    return memo_.emplace(e.id, std::move(ev)).first->second;
  }

 private:
  FiniteGroup build(const CatalogEntry& e) {
    InstantiateOptions io;
    io.max_cosets = opts_.max_cosets;
    return instantiate(catalog_, e, p_, io);
  }

  Evaluation evaluate(const CatalogEntry& e) {
    Evaluation ev;
    const std::uint64_t order = checked_pow(p_, e.n);
    std::optional<FiniteGroup> g;

    std::vector<const Evaluation*> factors;
    if (e.recipe.kind == Recipe::Kind::abelian) {
      std::vector<std::uint64_t> orders;
      for (unsigned x : e.recipe.exponents) orders.push_back(checked_pow(p_, x));
      ev.abelian = true;
      ev.ab = AbelianInvariants::from_cyclic(orders);
    } else if (e.recipe.kind == Recipe::Kind::product) {
      ev.abelian = true;
      for (const auto& f : e.recipe.factors) {
        const Evaluation& fe = (*this)(catalog_.entry(f));
        factors.push_back(&fe);
        ev.abelian = ev.abelian && fe.abelian;
        ev.k += fe.k;
        ev.ab = ev.ab + fe.ab;
      }
    } else if (e.extraspecial) {
      ev.k = 1;
      ev.ab = AbelianInvariants::from_cyclic(std::vector<std::uint64_t>(2 * e.extraspecial->m, p_));
    } else {
      g = build(e);
      ev.abelian = g->is_abelian();
      ev.k = log_p(derived_subgroup(*g).order(), p_);
      ev.ab = abelianization(*g);
    }

    std::optional<AbelianInvariants> engine;
    if (order <= opts_.homology_cap) {
      if (!g) g = build(e);
      HomologyOptions ho;
      ho.cap = opts_.homology_cap;
      ho.seed = opts_.seed;
      engine = second_homology(*g, ho).invariants;
    }

    std::optional<AbelianInvariants> calc;
    std::optional<unsigned> calc_m;
    if (e.recipe.kind == Recipe::Kind::abelian && abelian_formula_validated()) {
      calc = multiplier_abelian(ev.ab);
    } else if (e.recipe.kind == Recipe::Kind::product && factors.size() >= 1) {
      bool invariants = true, orders = true;
      for (const Evaluation* f : factors) {
        invariants = invariants && f->multiplier;
        orders = orders && f->m;
      }
      if (invariants) {
        AbelianInvariants m = *factors[0]->multiplier, h_ab = factors[0]->ab;
        for (std::size_t i = 1; i < factors.size(); ++i) {
          m = multiplier_direct_product(m, *factors[i]->multiplier, h_ab, factors[i]->ab);
          h_ab = h_ab + factors[i]->ab;
        }
        calc = m;
      } else if (orders) {
        unsigned m = *factors[0]->m;
        AbelianInvariants h_ab = factors[0]->ab;
        for (std::size_t i = 1; i < factors.size(); ++i) {
          m = multiplier_exponent_direct_product(m, *factors[i]->m, h_ab, factors[i]->ab, p_);
          h_ab = h_ab + factors[i]->ab;
        }
        calc_m = m;
      }
    } else if (e.extraspecial) {
      calc_m = log_p(multiplier_extraspecial(p_, e.extraspecial->m, e.extraspecial->type), p_);
      if (*calc_m == 0) calc = AbelianInvariants{};
    }
    if (calc) calc_m = log_p(calc->order(), p_);

    if (engine) {
      ev.multiplier = engine;
      ev.m = log_p(engine->order(), p_);
      ev.method = "bar-resolution";
      if (calc_m) {
        if ((calc && *calc != *engine) || *calc_m != *ev.m) {
          ev.conflict = "engine gives " + engine->to_string() + ", calculus gives " +
                        (calc ? calc->to_string() : "order p^" + std::to_string(*calc_m));
        } else {
          ev.method = "both";
        }
      }
    } else if (calc_m) {
      ev.multiplier = calc;
      ev.m = calc_m;
      ev.method = "calculus";
    }
    return ev;
  }

  const Catalog& catalog_;
  std::uint64_t p_;
  VerifyOptions opts_;
  std::map<std::string, Evaluation> memo_;
};

std::string or_dash(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

ClassificationReport verify_classification(const Catalog& catalog, std::uint64_t p, unsigned n,
                                           const VerifyOptions& opts) {
  const Slice& slice = catalog.slice(p, n);
  const auto family = catalog.family(p, n);

  ClassificationReport report;
  report.p = p;
  report.n = n;
  report.partial = slice.partial;
  for (const auto& g : slice.t4) report.expected_t4.push_back(g.label);

  std::set<std::string> expected_ids;
  for (const auto& g : slice.t4) expected_ids.insert(g.one_of.begin(), g.one_of.end());

  Evaluator evaluate(catalog, p, opts);
  bool conflict = false;
  std::map<unsigned, std::vector<std::string>> t4_by_k;
  for (const CatalogEntry* e : family) {
    const Evaluation& ev = evaluate(*e);
    ReportRow row;
    row.id = e->id;
    row.abelian = ev.abelian;
    row.k = ev.k;
    row.multiplier = ev.multiplier;
    row.m_g = ev.m;
    row.method = ev.method;
    if (ev.m) row.t = t_invariant(PGroupProfile{p, n, ev.k, ev.m});

    if (!ev.conflict.empty()) {
      conflict = true;
      row.verdict = "conflict";
      report.anomalies.push_back(e->id + ": " + ev.conflict);
    } else if (!row.t) {
      row.verdict = "unverified";
    } else if (*row.t == 4 && ev.abelian) {
      row.verdict = "t4-abelian";
      report.abelian_t4.push_back(e->id);
    } else if (*row.t == 4) {
      row.verdict = expected_ids.count(e->id) ? "t4-expected" : "t4-unexpected";
      report.computed_t4.push_back(e->id);
      t4_by_k[ev.k].push_back(e->id);
    } else {
      row.verdict = "ok";
    }

    if (row.t && e->expected_t && *e->expected_t != *row.t) {
      report.anomalies.push_back(e->id + ": t = " + std::to_string(*row.t) + ", annotated " +
                                 std::to_string(*e->expected_t));
    }
    if (ev.m && e->expected_m && *e->expected_m != *ev.m) {
      report.anomalies.push_back(e->id + ": m_G = " + std::to_string(*ev.m) + ", annotated " +
                                 std::to_string(*e->expected_m));
    }
    if (ev.m && !ev.abelian) {
      const MultiplierBound b = nonabelian_multiplier_bound(PGroupProfile{p, n, ev.k, ev.m});
      if (*ev.m > b.exponent) {
        report.anomalies.push_back(e->id + ": m_G = " + std::to_string(*ev.m) + " exceeds the bound " +
                                   std::to_string(b.exponent) + " for k = " + std::to_string(ev.k));
      } else if (b.meets_k1_equality) {
        report.notes.push_back(e->id + " attains the k = 1 bound m_G = " + std::to_string(b.exponent));
      }
    }
    report.rows.push_back(std::move(row));
  }

  bool mismatch = conflict;
  bool pending = false;
  for (const auto& g : slice.t4) {
    unsigned hits = 0, unknown = 0;
    bool present = false;
    for (const auto& id : g.one_of) {
      auto row = std::find_if(report.rows.begin(), report.rows.end(), [&](const ReportRow& r) { return r.id == id; });
      if (row == report.rows.end()) continue;
      present = true;
      if (!row->t) ++unknown;
      else if (*row->t == 4) ++hits;
    }
    if (!present) continue;
    if (hits > 1 || (hits == 0 && unknown == 0)) {
      mismatch = true;
      report.anomalies.push_back("expected t = 4 group " + g.label + ": " + std::to_string(hits) + " of " +
                                 std::to_string(g.one_of.size()) + " candidates have t = 4");
      for (auto& r : report.rows) {
        if (std::find(g.one_of.begin(), g.one_of.end(), r.id) != g.one_of.end() && r.verdict == "ok") {
          r.verdict = "t4-missing";
        }
      }
    } else if (hits == 0) {
      pending = true;
    }
  }
  for (const auto& r : report.rows) {
    if (r.verdict == "t4-unexpected") {
      mismatch = true;
      report.anomalies.push_back(r.id + ": t = 4 but not in the expected list");
    }
    if (r.verdict == "unverified") pending = true;
  }
  report.verdict = mismatch ? "mismatch" : pending ? "incomplete" : "match";

  for (const auto& [k, ids] : t4_by_k) {
    report.notes.push_back("non-abelian t = 4 with |G'| = p^" + std::to_string(k) + ": " + join(ids, ", ") + " (" +
                           std::to_string(ids.size()) + (ids.size() == 1 ? " group)" : " groups)"));
  }
  if (n >= 3) {
    std::vector<std::string> floors;
    for (unsigned k = 1; k + 1 <= n - 1; ++k) {
      const MultiplierBound b = nonabelian_multiplier_bound(PGroupProfile{p, n, k, std::nullopt});
      const long t_min = long(n) * (n - 1) / 2 - long(b.exponent);
      floors.push_back("k=" + std::to_string(k) + ": t >= " + std::to_string(t_min));
    }
    if (!floors.empty()) report.notes.push_back("bound on m_G gives " + join(floors, ", "));
  }
  if (slice.partial) {
    report.notes.push_back("partial family: only the listed groups of order " + std::to_string(p) + "^" +
                           std::to_string(n) + " are computed");
  }
  if (!slice.note.empty()) report.notes.push_back(slice.note);
  return report;
}

std::string ClassificationReport::to_lines() const {
  std::string out;
  for (const auto& r : rows) {
    out += r.id + ' ' + or_dash(r.m_g) + ' ' + or_dash(r.t) + ' ' + r.method + ' ' + r.verdict + '\n';
  }
  return out;
}

std::string ClassificationReport::to_text() const {
  const std::vector<std::string> header{"id", "abelian", "k", "M(G)", "m_G", "t", "method", "verdict"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& r : rows) {
    cells.push_back({r.id, r.abelian ? "yes" : "no", std::to_string(r.k),
                     r.multiplier ? r.multiplier->to_string() : (r.m_g ? "order p^" + std::to_string(*r.m_g) : "-"),
                     or_dash(r.m_g), or_dash(r.t), r.method, r.verdict});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "groups of order " << p << "^" << n << (partial ? " (partial family)" : "") << "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  const auto list = [](const std::vector<std::string>& v) { return v.empty() ? std::string("none") : join(v, " "); };
  out << "computed t = 4: " << list(computed_t4) << "\n";
  out << "expected t = 4: " << list(expected_t4) << "\n";
  out << "abelian t = 4: " << list(abelian_t4) << "\n";
  for (const auto& note : notes) out << "note: " << note << "\n";
  for (const auto& a : anomalies) out << "anomaly: " << a << "\n";
  out << "verdict: " << verdict << "\n";
  return out.str();
}

}  // namespace schur
