#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schur/calculus.hpp"
#include "schur/catalog.hpp"
#include "schur/coset_enumeration.hpp"
#include "schur/errors.hpp"
#include "schur/homology.hpp"
#include "schur/number_theory.hpp"
#include "schur/presentation.hpp"

using namespace schur;

namespace {

enum Exit { ok = 0, mismatch = 1, bad_input = 2, too_large = 3, inconsistent = 4 };

struct RunConfig {
  std::string input;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> n;
  std::size_t homology_cap = kDefaultHomologyCap;
  std::optional<std::size_t> max_cosets;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string id;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// A Cayley table starts with its order; a presentation starts with a keyword.
bool looks_like_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return std::isdigit(static_cast<unsigned char>(line[b]));
  }
  return false;
}

FiniteGroup load_group(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  if (looks_like_table(text)) return FiniteGroup::from_text(text);
  const FpPresentation pres = parse_presentation(text);
  return todd_coxeter(pres, cfg.max_cosets.value_or(kDefaultMaxCosets), cfg.p);
}

int cmd_compute(const RunConfig& cfg) {
  const FiniteGroup g = load_group(cfg);
  const auto pp = as_prime_power(g.order());

  AbelianInvariants m;
  std::string method;
  if (g.order() > cfg.homology_cap && pp && g.is_abelian()) {
    m = multiplier_abelian(abelian_invariants(g));
    method = "calculus";
  } else {
    HomologyOptions ho;
    ho.cap = cfg.homology_cap;
    ho.seed = cfg.seed;
    m = second_homology(g, ho).invariants;
    method = "bar-resolution";
  }

  std::optional<PGroupProfile> profile;
  std::optional<unsigned> t;
  if (pp) {
    profile = PGroupProfile::of(g, log_p_order(m, pp->p));
    t = t_invariant(*profile);
  } else if (g.order() == 1) {
    t = 0;
  }

  const std::string name = std::filesystem::path(cfg.input).stem().string();
  if (cfg.format == "lines") {
    std::cout << name << ' ' << (profile ? std::to_string(*profile->multiplier_exponent) : "-") << ' '
              << (t ? std::to_string(*t) : "-") << ' ' << method << " ok\n";
    return ok;
  }

  std::ostringstream out;
  out << "G: order " << g.order();
  if (pp) out << " = " << pp->p << "^" << pp->exponent;
  out << ", G/G' = " << abelianization(g).to_string() << ", |G'| = " << derived_subgroup(g).order() << "\n";
  if (m.is_trivial()) {
    out << "M(G) trivial";
  } else {
    out << "M(G) = " << m.to_string() << ", |M| = " << m.order();
  }
  if (t) out << ", t = " << *t;
  out << "\n";
  if (profile) {
    out << "n = " << profile->n << ", k = " << profile->k << ", m_G = " << *profile->multiplier_exponent << "\n";
  } else if (g.order() > 1) {
    out << "t undefined: |G| is not a prime power\n";
  }
  out << "method: " << method << "\n";
  if (pp && g.order() <= 1024 && Catalog::builtin().covers(pp->p, pp->exponent)) {
    const MatchResult match = match_group(Catalog::builtin(), g);
    out << "catalog: " << (match.entry ? match.entry->id : match.undecided ? "undecided" : "unknown") << "\n";
  }
  std::cout << out.str();
  return ok;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions vo;
  vo.homology_cap = cfg.homology_cap;
  vo.seed = cfg.seed;
  vo.max_cosets = cfg.max_cosets;
  const ClassificationReport r = verify_classification(Catalog::builtin(), *cfg.p, *cfg.n, vo);
  std::cout << (cfg.format == "lines" ? r.to_lines() : r.to_text());
  return r.verdict == "match" && r.anomalies.empty() ? ok : mismatch;
}

int cmd_catalog_list(const RunConfig& cfg) {
  const Catalog& c = Catalog::builtin();
  std::vector<const CatalogEntry*> entries;
  if (cfg.p && cfg.n) {
    entries = c.family(*cfg.p, *cfg.n);
  } else {
    for (const auto& e : c.entries()) {
      if ((!cfg.p || e.valid_for(*cfg.p)) && (!cfg.n || e.n == *cfg.n)) entries.push_back(&e);
    }
  }
  std::size_t width = 2;
  for (const auto* e : entries) width = std::max(width, e->id.size());
  std::ostringstream out;
  for (const auto* e : entries) {
    if (cfg.format == "lines") {
      out << e->id << ' ' << e->n << ' ' << to_string(e->valid_p) << '\n';
      continue;
    }
    std::string order = "p^" + std::to_string(e->n);
    std::string valid = to_string(e->valid_p);
    out << e->id << std::string(width - e->id.size() + 2, ' ') << order << std::string(6 - order.size(), ' ') << valid
        << std::string(6 - valid.size(), ' ') << e->source << '\n';
  }
  std::cout << out.str();
  return ok;
}

int cmd_catalog_show(const RunConfig& cfg) {
  const CatalogEntry& e = Catalog::builtin().entry(cfg.id);
  std::ostringstream out;
  out << "id: " << e.id << "\n";
  out << "order: p^" << e.n << "\n";
  out << "valid p: " << to_string(e.valid_p) << "\n";
  out << "source: " << e.source << "\n";
  out << (e.recipe.kind == Recipe::Kind::presentation ? "relations: " : "construction: ") << e.description() << "\n";
  if (e.expected_t) out << "expected t: " << *e.expected_t << "\n";
  if (e.expected_m) out << "expected m_G: " << *e.expected_m << "\n";
  std::cout << out.str();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multipliers of finite p-groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto positive = CLI::PositiveNumber;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--homology-cap", cfg.homology_cap, "largest |G| handed to the homology engine")
        ->check(positive);
    sub->add_option("--max-cosets", cfg.max_cosets, "coset enumeration budget")->check(positive);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "lines"}));
    sub->add_option("--seed", cfg.seed, "pivot tie-break seed");
  };
  const auto prime_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          return is_prime(std::stoull(s)) ? "" : s + " is not prime";
        } catch (const std::exception&) {
          return s + " is not a number";
        }
      },
      "PRIME");

  auto* compute = app.add_subcommand("compute", "multiplier and t(G) of a presentation or Cayley table");
  compute->add_option("input", cfg.input, ".fp presentation or Cayley-table file")->required();
  compute->add_option("--p", cfg.p, "prime for presentation templates")->check(prime_check);
  common(compute);

  auto* verify = app.add_subcommand("verify", "compare the t = 4 groups of order p^n with the catalog");
  verify->add_option("--p", cfg.p, "prime")->required()->check(prime_check);
  verify->add_option("--n", cfg.n, "order exponent")->required()->check(positive);
  common(verify);

  auto* catalog = app.add_subcommand("catalog", "bundled group catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list entries");
  list->add_option("--p", cfg.p, "only entries valid for p")->check(prime_check);
  list->add_option("--n", cfg.n, "only entries of order p^n")->check(positive);
  list->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "lines"}));
  auto* show = catalog->add_subcommand("show", "show one entry");
  show->add_option("id", cfg.id, "entry id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*list) return cmd_catalog_list(cfg);
    if (*show) return cmd_catalog_show(cfg);
  } catch (const NotCatalogued& e) {
    std::cerr << "not catalogued: " << e.what() << "\n";
    return bad_input;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const InvalidGroupError& e) {
    std::cerr << "invalid group: " << e.what() << "\n";
    return bad_input;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const SizeError& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return too_large;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return inconsistent;
  } catch (const CatalogError& e) {
    std::cerr << "catalog integrity failure: " << e.what() << "\n";
    return inconsistent;
  }
  return bad_input;
}
