#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace exlogic {

enum class Conn : uint8_t { Var, Top, Bottom, Neg, And, Or };

// Immutable propositional formula over {&, |, ~, T, F}. Nodes are shared;
// equality is structural with a cached hash for the fast path.
class Formula {
 public:
  Formula() = delete;

  static Formula var(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula neg(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);

  Conn conn() const { return node_->conn; }
  bool is_atom() const {
    return node_->conn == Conn::Var || node_->conn == Conn::Top ||
           node_->conn == Conn::Bottom;
  }
  // Var only.
  const std::string& var_name() const;
  // Neg only.
  Formula child() const;
  // And/Or only.
  Formula left() const;
  Formula right() const;

  size_t hash() const { return node_->hash; }
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Total structural order: by connective, then name/children. Used for
  // canonical orderings of formula sets.
  static int compare(const Formula& a, const Formula& b);
  bool operator<(const Formula& other) const { return compare(*this, other) < 0; }

  // Number of connective occurrences (~, &, |); atoms count zero.
  int connective_count() const;
  int depth() const;

  std::string text() const;

 private:
  struct Node {
    Conn conn;
    std::string name;                  // Var
    std::shared_ptr<const Node> a, b;  // Neg uses a; And/Or use a, b
    size_t hash = 0;
    int conn_count = 0;
    int depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Conn c, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

// Two-sided sequent lhs |- rhs. One-sided inputs are normalized at parse
// time: missing antecedent becomes T, missing consequent becomes F.
struct Sequent {
  Formula lhs, rhs;
  bool operator==(const Sequent& o) const { return lhs == o.lhs && rhs == o.rhs; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  std::string text() const;
};

using Substitution = std::map<std::string, Formula>;

Formula substitute(const Formula& f, const Substitution& s);
Sequent substitute(const Sequent& s, const Substitution& sub);

// Bottom-up T/F absorption: x&T=x, x&F=F, x|F=x, x|T=T, ~T=F, ~F=T.
// Sound in every bounded lattice with ~0=1 and ~1=0.
Formula simplify_constants(const Formula& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, const std::string& what);
  size_t position;  // byte offset into the input
};

// Grammar (ASCII): sequent := formula "|-" formula | "|-" formula | formula "|-"
//                  formula := disj; disj := conj ("|" conj)*;
//                  conj := unary ("&" unary)*; unary := "~" unary | atom;
//                  atom := ident | "T" | "F" | "(" formula ")"
// Binary operators associate to the left; precedence ~ > & > |.
Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
// Accepts either form; a bare formula parses as Formula, anything with |-
// as Sequent.
std::variant<Formula, Sequent> parse(std::string_view text);

std::string print(const Formula& f);
std::string print(const Sequent& s);

// Distinct subformulas, deterministic order (sorted by structural order).
std::vector<Formula> subformulas(const Formula& f);
std::vector<Formula> subformulas(const Sequent& s);

// Subformulas of both sides, closed under prefixing ~ up to negation_depth,
// plus T and F. Sorted by structural order.
std::vector<Formula> subformula_closure(const Sequent& s, int negation_depth);

// Sorted distinct variable names.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(const Sequent& s);

bool contains_subformula(const Formula& haystack, const Formula& needle);

}  // namespace exlogic
