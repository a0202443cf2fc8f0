#include "exlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace exlogic {

namespace {

size_t mix(size_t h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Formula Formula::make(Conn c, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->name = std::move(name);
  size_t h = static_cast<size_t>(c) * 0x100000001b3ull + 1469598103934665603ull;
  int cc = 0, d = 0;
  if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
  if (a) {
    n->a = a->node_;
    h = mix(h, a->hash());
    cc += a->node_->conn_count;
    d = std::max(d, a->node_->depth);
  }
  if (b) {
    n->b = b->node_;
    h = mix(h, b->hash());
    cc += b->node_->conn_count;
    d = std::max(d, b->node_->depth);
  }
  if (c == Conn::Neg || c == Conn::And || c == Conn::Or) {
    cc += 1;
    d += 1;
  }
  n->hash = h;
  n->conn_count = cc;
  n->depth = d;
  return Formula(std::move(n));
}

Formula Formula::var(std::string name) { return make(Conn::Var, std::move(name), nullptr, nullptr); }
Formula Formula::top() { return make(Conn::Top, "", nullptr, nullptr); }
Formula Formula::bottom() { return make(Conn::Bottom, "", nullptr, nullptr); }
Formula Formula::neg(Formula f) { return make(Conn::Neg, "", &f, nullptr); }
Formula Formula::conj(Formula l, Formula r) { return make(Conn::And, "", &l, &r); }
Formula Formula::disj(Formula l, Formula r) { return make(Conn::Or, "", &l, &r); }

const std::string& Formula::var_name() const {
  if (node_->conn != Conn::Var) throw std::logic_error("var_name on non-variable");
  return node_->name;
}

Formula Formula::child() const {
  if (node_->conn != Conn::Neg) throw std::logic_error("child on non-negation");
  return Formula(node_->a);
}

Formula Formula::left() const {
  if (node_->conn != Conn::And && node_->conn != Conn::Or)
    throw std::logic_error("left on non-binary formula");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (node_->conn != Conn::And && node_->conn != Conn::Or)
    throw std::logic_error("right on non-binary formula");
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->conn != y->conn) return false;
  switch (x->conn) {
    case Conn::Var: return x->name == y->name;
    case Conn::Top:
    case Conn::Bottom: return true;
    case Conn::Neg: return Formula(x->a) == Formula(y->a);
    case Conn::And:
    case Conn::Or:
      return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
  }
  return false;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_.get() == b.node_.get()) return 0;
  if (a.node_->conn != b.node_->conn)
    return static_cast<int>(a.node_->conn) < static_cast<int>(b.node_->conn) ? -1 : 1;
  switch (a.node_->conn) {
    case Conn::Var: return a.node_->name.compare(b.node_->name);
    case Conn::Top:
    case Conn::Bottom: return 0;
    case Conn::Neg: return compare(Formula(a.node_->a), Formula(b.node_->a));
    case Conn::And:
    case Conn::Or: {
      int c = compare(Formula(a.node_->a), Formula(b.node_->a));
      if (c != 0) return c;
      return compare(Formula(a.node_->b), Formula(b.node_->b));
    }
  }
  return 0;
}

int Formula::connective_count() const { return node_->conn_count; }
int Formula::depth() const { return node_->depth; }

// ---------- printing ----------

namespace {

// precedence: | = 0, & = 1, ~ = 2, atom = 3
int precedence(Conn c) {
  switch (c) {
    case Conn::Or: return 0;
    case Conn::And: return 1;
    case Conn::Neg: return 2;
    default: return 3;
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  int p = precedence(f.conn());
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.conn()) {
    case Conn::Var: out += f.var_name(); break;
    case Conn::Top: out += 'T'; break;
    case Conn::Bottom: out += 'F'; break;
    case Conn::Neg:
      out += '~';
      render(f.child(), 2, out);
      break;
    case Conn::And:
      render(f.left(), 1, out);
      out += " & ";
      render(f.right(), 2, out);
      break;
    case Conn::Or:
      render(f.left(), 0, out);
      out += " | ";
      render(f.right(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::string print(const Sequent& s) { return print(s.lhs) + " |- " + print(s.rhs); }

std::string Formula::text() const { return print(*this); }
std::string Sequent::text() const { return print(*this); }

// ---------- parsing ----------

ParseError::ParseError(size_t pos, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

struct Token {
  enum Kind { Ident, TopTok, BotTok, NegTok, AndTok, OrTok, Turnstile, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    char c = s_[i_];
    switch (c) {
      case '~': ++i_; tok_ = {Token::NegTok, "~", start}; return;
      case '&': ++i_; tok_ = {Token::AndTok, "&", start}; return;
      case '(': ++i_; tok_ = {Token::LParen, "(", start}; return;
      case ')': ++i_; tok_ = {Token::RParen, ")", start}; return;
      case '|':
        ++i_;
        if (i_ < s_.size() && s_[i_] == '-') {
          ++i_;
          tok_ = {Token::Turnstile, "|-", start};
        } else {
          tok_ = {Token::OrTok, "|", start};
        }
        return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      std::string word(s_.substr(i_, j - i_));
      i_ = j;
      if (word == "T") {
        tok_ = {Token::TopTok, word, start};
      } else if (word == "F") {
        tok_ = {Token::BotTok, word, start};
      } else {
        tok_ = {Token::Ident, word, start};
      }
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) {}

  Formula formula() {
    Formula f = conj_chain();
    while (lex_.peek().kind == Token::OrTok) {
      lex_.take();
      f = Formula::disj(f, conj_chain());
    }
    return f;
  }

  bool at(Token::Kind k) const { return lex_.peek().kind == k; }
  Token take() { return lex_.take(); }
  const Token& peek() const { return lex_.peek(); }

  void expect_end() {
    if (lex_.peek().kind != Token::End)
      throw ParseError(lex_.peek().pos, "unexpected trailing input '" + lex_.peek().text + "'");
  }

 private:
  Formula conj_chain() {
    Formula f = unary();
    while (lex_.peek().kind == Token::AndTok) {
      lex_.take();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (lex_.peek().kind == Token::NegTok) {
      lex_.take();
      return Formula::neg(unary());
    }
    return atom();
  }

  Formula atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Ident: return Formula::var(t.text);
      case Token::TopTok: return Formula::top();
      case Token::BotTok: return Formula::bottom();
      case Token::LParen: {
        Formula f = formula();
        Token close = lex_.take();
        if (close.kind != Token::RParen)
          throw ParseError(close.pos, "expected ')'");
        return f;
      }
      case Token::End: throw ParseError(t.pos, "unexpected end of input");
      default: throw ParseError(t.pos, "unexpected token '" + t.text + "'");
    }
  }

  Lexer lex_;
};

}  // namespace

std::variant<Formula, Sequent> parse(std::string_view text) {
  Parser p(text);
  if (p.at(Token::Turnstile)) {
    p.take();
    Formula rhs = p.formula();
    p.expect_end();
    return Sequent{Formula::top(), rhs};
  }
  Formula lhs = p.formula();
  if (p.at(Token::Turnstile)) {
    p.take();
    if (p.at(Token::End)) return Sequent{lhs, Formula::bottom()};
    Formula rhs = p.formula();
    p.expect_end();
    return Sequent{lhs, rhs};
  }
  p.expect_end();
  return lhs;
}

Formula parse_formula(std::string_view text) {
  auto v = parse(text);
  if (std::holds_alternative<Sequent>(v))
    throw ParseError(0, "expected a formula, got a sequent");
  return std::get<Formula>(v);
}

Sequent parse_sequent(std::string_view text) {
  auto v = parse(text);
  if (std::holds_alternative<Formula>(v))
    throw ParseError(text.size(), "expected a sequent (missing |-)");
  return std::get<Sequent>(v);
}

// ---------- substitution / helpers ----------

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = s.find(f.var_name());
      return it == s.end() ? f : it->second;
    }
    case Conn::Top:
    case Conn::Bottom: return f;
    case Conn::Neg: return Formula::neg(substitute(f.child(), s));
    case Conn::And: return Formula::conj(substitute(f.left(), s), substitute(f.right(), s));
    case Conn::Or: return Formula::disj(substitute(f.left(), s), substitute(f.right(), s));
  }
  throw std::logic_error("unreachable");
}

Sequent substitute(const Sequent& s, const Substitution& sub) {
  return Sequent{substitute(s.lhs, sub), substitute(s.rhs, sub)};
}

Formula simplify_constants(const Formula& f) {
  switch (f.conn()) {
    case Conn::Var:
    case Conn::Top:
    case Conn::Bottom: return f;
    case Conn::Neg: {
      Formula c = simplify_constants(f.child());
      if (c.conn() == Conn::Top) return Formula::bottom();
      if (c.conn() == Conn::Bottom) return Formula::top();
      return Formula::neg(c);
    }
    case Conn::And: {
      Formula l = simplify_constants(f.left());
      Formula r = simplify_constants(f.right());
      if (l.conn() == Conn::Bottom || r.conn() == Conn::Bottom) return Formula::bottom();
      if (l.conn() == Conn::Top) return r;
      if (r.conn() == Conn::Top) return l;
      return Formula::conj(l, r);
    }
    case Conn::Or: {
      Formula l = simplify_constants(f.left());
      Formula r = simplify_constants(f.right());
      if (l.conn() == Conn::Top || r.conn() == Conn::Top) return Formula::top();
      if (l.conn() == Conn::Bottom) return r;
      if (r.conn() == Conn::Bottom) return l;
      return Formula::disj(l, r);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.conn()) {
    case Conn::Neg: collect_subformulas(f.child(), out); break;
    case Conn::And:
    case Conn::Or:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
    default: break;
  }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::set<Formula> s;
  collect_subformulas(f, s);
  return std::vector<Formula>(s.begin(), s.end());
}

std::vector<Formula> subformulas(const Sequent& s) {
  std::set<Formula> acc;
  collect_subformulas(s.lhs, acc);
  collect_subformulas(s.rhs, acc);
  return std::vector<Formula>(acc.begin(), acc.end());
}

std::vector<Formula> subformula_closure(const Sequent& s, int negation_depth) {
  std::set<Formula> acc;
  collect_subformulas(s.lhs, acc);
  collect_subformulas(s.rhs, acc);
  std::set<Formula> out;
  for (const Formula& f : acc) {
    Formula cur = f;
    out.insert(cur);
    for (int k = 0; k < negation_depth; ++k) {
      cur = Formula::neg(cur);
      out.insert(cur);
    }
  }
  out.insert(Formula::top());
  out.insert(Formula::bottom());
  return std::vector<Formula>(out.begin(), out.end());
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.conn()) {
    case Conn::Var: out.insert(f.var_name()); break;
    case Conn::Neg: collect_vars(f.child(), out); break;
    case Conn::And:
    case Conn::Or:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      break;
    default: break;
  }
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return std::vector<std::string>(s.begin(), s.end());
}

std::vector<std::string> variables(const Sequent& s) {
  std::set<std::string> acc;
  collect_vars(s.lhs, acc);
  collect_vars(s.rhs, acc);
  return std::vector<std::string>(acc.begin(), acc.end());
}

bool contains_subformula(const Formula& haystack, const Formula& needle) {
  if (haystack == needle) return true;
  switch (haystack.conn()) {
    case Conn::Neg: return contains_subformula(haystack.child(), needle);
    case Conn::And:
    case Conn::Or:
      return contains_subformula(haystack.left(), needle) ||
             contains_subformula(haystack.right(), needle);
    default: return false;
  }
}

}  // namespace exlogic
