#include "schur/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "schur/errors.hpp"
#include "schur/number_theory.hpp"

namespace schur {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = inverse_letter(l);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(inverse(x), inverse(y)), concat(x, y));
}

Word power(const Word& w, std::int64_t k) {
  Word base = k < 0 ? inverse(w) : w;
  if (k < 0) k = -k;
  Word out;
  for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::string& name = names.at(letter_generator(w[i]));
    std::size_t run = j - i;
    if (!s.empty()) s += ' ';
    s += name;
    if (letter_is_inverse(w[i]))
      s += "^-" + std::to_string(run);
    else if (run > 1)
      s += "^" + std::to_string(run);
    i = j;
  }
  return s;
}

namespace detail {

struct ExponentNode {
  enum class Kind { integer, prime, neg, add, sub, mul, pow } kind;
  std::int64_t value = 0;
  std::shared_ptr<const ExponentNode> left, right;

  std::int64_t eval(std::optional<std::int64_t> p) const {
    std::int64_t a, b, r;
    switch (kind) {
      case Kind::integer: return value;
      case Kind::prime:
        if (!p) throw DomainError("presentation uses p but no prime was supplied");
        return *p;
      case Kind::neg: return -left->eval(p);
      default: break;
    }
    a = left->eval(p);
    b = right->eval(p);
    bool overflow = false;
    switch (kind) {
      case Kind::add: overflow = __builtin_add_overflow(a, b, &r); break;
      case Kind::sub: overflow = __builtin_sub_overflow(a, b, &r); break;
      case Kind::mul: overflow = __builtin_mul_overflow(a, b, &r); break;
      case Kind::pow:
        if (b < 0) throw DomainError("negative power inside an exponent");
        r = 1;
        for (std::int64_t i = 0; i < b && !overflow; ++i) overflow = __builtin_mul_overflow(r, a, &r);
        break;
      default: r = 0;
    }
    if (overflow || r > 1'000'000 || r < -1'000'000) throw DomainError("exponent out of range");
    return r;
  }
};

struct WordNode {
  enum class Kind { identity, generator, product, power, commutator } kind;
  std::uint32_t generator = 0;
  std::vector<std::shared_ptr<const WordNode>> parts;
  std::shared_ptr<const ExponentNode> exponent;

  Word eval(std::optional<std::int64_t> p) const {
    switch (kind) {
      case Kind::identity: return {};
      case Kind::generator: return {make_letter(generator, false)};
      case Kind::product: {
        Word w;
        for (const auto& part : parts) w = concat(w, part->eval(p));
        return w;
      }
      case Kind::power: return power(parts[0]->eval(p), exponent->eval(p));
      case Kind::commutator: {
        Word w = parts[0]->eval(p);
        for (std::size_t i = 1; i < parts.size(); ++i) w = commutator(w, parts[i]->eval(p));
        return w;
      }
    }
    return {};
  }
};

}  // namespace detail

using detail::ExponentNode;
using detail::WordNode;
using ExpPtr = std::shared_ptr<const ExponentNode>;
using WordPtr = std::shared_ptr<const WordNode>;

FpPresentation::FpPresentation(std::vector<std::string> generators, std::vector<RelationTemplate> relations,
                               std::optional<std::uint64_t> p, bool uses_p, std::string source)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      p_(p),
      uses_p_(uses_p),
      source_(std::move(source)) {}

FpPresentation FpPresentation::from_words(std::vector<std::string> generators, std::vector<Word> relators) {
  FpPresentation fp;
  for (const Word& w : relators)
    for (Letter l : w)
      if (letter_generator(l) >= generators.size()) throw DomainError("relator uses an undeclared generator");
  for (Word& w : relators) fp.fixed_.push_back(free_reduce(std::move(w)));
  fp.generators_ = std::move(generators);
  return fp;
}

std::vector<std::string> FpPresentation::relation_texts() const {
  std::vector<std::string> out;
  for (const auto& r : relations_)
    if (out.empty() || out.back() != r.text) out.push_back(r.text);
  return out;
}

std::vector<Word> FpPresentation::relators(std::optional<std::uint64_t> p) const {
  std::optional<std::uint64_t> use = p ? p : p_;
  if (use && !is_prime(*use)) throw DomainError("p = " + std::to_string(*use) + " is not prime");
  if (uses_p_ && !use) throw DomainError("presentation is a template in p; supply a prime");
  std::optional<std::int64_t> pv;
  if (use) pv = std::int64_t(*use);
  std::vector<Word> out;
  for (const auto& r : relations_) {
    Word w = r.lhs->eval(pv);
    if (r.rhs) w = concat(w, inverse(r.rhs->eval(pv)));
    out.push_back(std::move(w));
  }
  out.insert(out.end(), fixed_.begin(), fixed_.end());
  return out;
}

FpPresentation FpPresentation::instantiate(std::uint64_t p) const {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  FpPresentation out = *this;
  out.p_ = p;
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {}

  FpPresentation run() {
    std::optional<std::uint64_t> p;
    bool have_gens = false, have_rels = false;
    std::vector<RelationTemplate> relations;
    skip_space();
    while (!at_end()) {
      std::size_t line = line_, col = col_;
      std::string key = identifier();
      if (key.empty()) fail("expected a section keyword (p:, gens:, rels:)");
      skip_space();
      expect(':');
      if (key == "p") {
        if (p) fail("duplicate p header", line, col);
        skip_space();
        std::size_t l = line_, c = col_;
        std::int64_t v = integer();
        if (v < 2 || !is_prime(std::uint64_t(v))) fail("p must be a prime", l, c);
        p = std::uint64_t(v);
      } else if (key == "gens") {
        if (have_gens) fail("duplicate gens section", line, col);
        have_gens = true;
        parse_generators();
      } else if (key == "rels") {
        if (!have_gens) fail("rels section before gens", line, col);
        if (have_rels) fail("duplicate rels section", line, col);
        have_rels = true;
        parse_relations(relations);
      } else {
        fail("unknown section '" + key + "'", line, col);
      }
      skip_space();
      if (peek() == ';') advance();
      skip_space();
    }
    if (!have_gens) fail("missing gens section");
    return FpPresentation(gens_, std::move(relations), p, uses_p_, std::string(src_));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t col) const {
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    std::string s;
    if (!ident_start(peek())) return s;
    while (!at_end() && ident_char(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  std::int64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent: expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("integer too large");
      advance();
    }
    return v;
  }

  void parse_generators() {
    for (;;) {
      skip_space();
      if (at_end() || peek() == ';' || lookahead_keyword()) break;
      if (peek() == ',') {
        advance();
        continue;
      }
      std::size_t l = line_, c = col_;
      std::string name = identifier();
      if (name.empty()) fail("expected a generator name");
      if (std::find(gens_.begin(), gens_.end(), name) != gens_.end())
        fail("duplicate generator '" + name + "'", l, c);
      gens_.push_back(name);
    }
    if (gens_.empty()) fail("gens section declares no generators");
  }

  // True when the upcoming text is "<ident>:" (a section keyword).
  bool lookahead_keyword() const {
    std::size_t i = pos_;
    if (i >= src_.size() || !ident_start(src_[i])) return false;
    while (i < src_.size() && ident_char(src_[i])) ++i;
    while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t')) ++i;
    return i < src_.size() && src_[i] == ':';
  }

  void parse_relations(std::vector<RelationTemplate>& out) {
    for (;;) {
      skip_space();
      if (at_end() || peek() == ';') break;
      if (lookahead_keyword()) break;
      std::size_t start = pos_;
      std::vector<WordPtr> chain;
      chain.push_back(word_expr());
      skip_space();
      while (peek() == '=') {
        advance();
        chain.push_back(word_expr());
        skip_space();
      }
      std::string text(src_.substr(start, pos_ - start));
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      bool has_identity = std::any_of(chain.begin(), chain.end(), [](const WordPtr& w) {
        return w->kind == WordNode::Kind::identity;
      });
      if (chain.size() == 1) {
        out.push_back({chain[0], nullptr, text});
      } else if (has_identity) {
        for (const auto& w : chain)
          if (w->kind != WordNode::Kind::identity) out.push_back({w, nullptr, text});
      } else {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back({chain[i], chain[i + 1], text});
      }
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (at_end() || peek() == ';' || lookahead_keyword()) break;
      fail("expected ',' or ';' after relation");
    }
  }

  static std::shared_ptr<WordNode> node(WordNode::Kind k) {
    auto n = std::make_shared<WordNode>();
    n->kind = k;
    return n;
  }

  // product of factors; stops at '=', ',', ';', ']', ')', end
  WordPtr word_expr() {
    skip_space();
    std::vector<WordPtr> factors;
    for (;;) {
      skip_space();
      char c = peek();
      if (at_end() || c == '=' || c == ',' || c == ';' || c == ']' || c == ')') break;
      if (lookahead_keyword()) break;
      factors.push_back(factor());
    }
    if (factors.empty()) fail("expected a group word");
    if (factors.size() == 1) return factors[0];
    auto n = std::make_shared<WordNode>();
    n->kind = WordNode::Kind::product;
    n->parts = std::move(factors);
    return n;
  }

  WordPtr factor() {
    std::vector<WordPtr> atoms = atom();
    // exponent binds to the last atom only ("ab^2" = a b^2)
    WordPtr last = atoms.back();
    atoms.pop_back();
    for (;;) {
      skip_space();
      if (peek() != '^') break;
      advance();
      skip_space();
      auto n = std::make_shared<WordNode>();
      n->kind = WordNode::Kind::power;
      n->parts = {last};
      n->exponent = exponent();
      last = n;
    }
    atoms.push_back(last);
    if (atoms.size() == 1) return atoms[0];
    auto n = std::make_shared<WordNode>();
    n->kind = WordNode::Kind::product;
    n->parts = std::move(atoms);
    return n;
  }

  std::vector<WordPtr> atom() {
    skip_space();
    std::size_t l = line_, c = col_;
    char ch = peek();
    if (ch == '(') {
      advance();
      WordPtr inner = word_expr();
      skip_space();
      if (peek() != ')') fail("unbalanced '(': expected ')'", l, c);
      advance();
      return {inner};
    }
    if (ch == '[') {
      advance();
      auto n = std::make_shared<WordNode>();
      n->kind = WordNode::Kind::commutator;
      n->parts.push_back(word_expr());
      skip_space();
      while (peek() == ',') {
        advance();
        n->parts.push_back(word_expr());
        skip_space();
      }
      if (peek() != ']') fail("unbalanced '[': expected ']'", l, c);
      advance();
      if (n->parts.size() < 2) fail("commutator needs at least two entries", l, c);
      return {n};
    }
    if (ch == '1') {
      advance();
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("integers are not group words", l, c);
      return {node(WordNode::Kind::identity)};
    }
    if (ident_start(ch)) {
      std::string run = identifier();
      return split_generators(run, l, c);
    }
    if (ch == ']' || ch == ')') fail(std::string("unbalanced '") + ch + "'", l, c);
    fail(std::string("unexpected character '") + ch + "'", l, c);
  }

  // "abc" -> a, b, c by greedy longest match against declared names.
  std::vector<WordPtr> split_generators(const std::string& run, std::size_t line, std::size_t col) {
    std::vector<WordPtr> out;
    std::size_t i = 0;
    while (i < run.size()) {
      std::size_t best = 0, best_len = 0;
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        const auto& name = gens_[g];
        if (name.size() > best_len && run.compare(i, name.size(), name) == 0) {
          best = g;
          best_len = name.size();
        }
      }
      if (best_len == 0) fail("unknown generator '" + run.substr(i) + "'", line, col + i);
      auto n = node(WordNode::Kind::generator);
      n->generator = std::uint32_t(best);
      out.push_back(n);
      i += best_len;
    }
    return out;
  }

  static ExpPtr exp_node(ExponentNode::Kind k, ExpPtr l = nullptr, ExpPtr r = nullptr, std::int64_t v = 0) {
    auto n = std::make_shared<ExponentNode>();
    n->kind = k;
    n->left = std::move(l);
    n->right = std::move(r);
    n->value = v;
    return n;
  }

  // After '^': [-] (INT | p | '(' arith ')' | '{' arith '}')
  ExpPtr exponent() {
    skip_space();
    if (peek() == '-') {
      advance();
      return exp_node(ExponentNode::Kind::neg, exponent());
    }
    return exponent_primary();
  }

  ExpPtr exponent_primary() {
    skip_space();
    std::size_t l = line_, c = col_;
    char ch = peek();
    if (ch == '(' || ch == '{') {
      char close = ch == '(' ? ')' : '}';
      advance();
      ExpPtr e = arith();
      skip_space();
      if (peek() != close) fail(std::string("unbalanced '") + ch + "' in exponent", l, c);
      advance();
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return exp_node(ExponentNode::Kind::integer, {}, {}, integer());
    if (ch == 'p' && !ident_char(pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0')) {
      advance();
      uses_p_ = true;
      return exp_node(ExponentNode::Kind::prime);
    }
    fail("malformed exponent", l, c);
  }

  ExpPtr arith() {
    ExpPtr left = term();
    for (;;) {
      skip_space();
      char ch = peek();
      if (ch != '+' && ch != '-') return left;
      advance();
      left = exp_node(ch == '+' ? ExponentNode::Kind::add : ExponentNode::Kind::sub, left, term());
    }
  }
  ExpPtr term() {
    ExpPtr left = unary();
    for (;;) {
      skip_space();
      if (peek() != '*') return left;
      advance();
      left = exp_node(ExponentNode::Kind::mul, left, unary());
    }
  }
  ExpPtr unary() {
    skip_space();
    if (peek() == '-') {
      advance();
      return exp_node(ExponentNode::Kind::neg, unary());
    }
    ExpPtr base = exponent_primary();
    skip_space();
    if (peek() == '^') {
      advance();
      return exp_node(ExponentNode::Kind::pow, base, unary());
    }
    return base;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::vector<std::string> gens_;
  bool uses_p_ = false;
};

}  // namespace

FpPresentation parse_presentation(std::string_view text) { return Parser(text).run(); }

}  // namespace schur
