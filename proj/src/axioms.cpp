#include "exlogic/axioms.hpp"

#include <stdexcept>

namespace exlogic {

const std::vector<NamedAxiom>& axiom_registry() {
  static const std::vector<NamedAxiom> registry = [] {
    std::vector<NamedAxiom> v;
    auto add = [&](const char* name, const char* text, const char* provenance) {
      v.push_back(NamedAxiom{name, parse_sequent(text), provenance});
    };
    add("ex",
        "~(a & ((b & c) | (b & d))) & a & (c | e) & ~~f |- "
        "~~(a & f) & ((a & c) | (a & e) | f) & ((b & (c | d)) | ~(b & (c | d)))",
        "six-variable axiom characterizing the common validities of orthologic "
        "and intuitionistic logic over fundamental logic");
    add("nu", "~~p & ~~q |- ~~(p & q)",
        "double negation distributes over conjunction");
    add("vi", "a & (c | e) & ~~f |- (a & c) | (a & e) | f",
        "guarded distributivity modulo a double-negated disjunct");
    add("cl",
        "~(a & ((b & c) | (b & d))) & a |- (b & (c | d)) | ~(b & (c | d))",
        "guarded excluded middle for b & (c | d)");
    add("distributivity", "a & (b | c) |- (a & b) | (a & c)",
        "lattice distributivity; holds in every Heyting lattice, fails in some "
        "ortholattices");
    add("dne", "~~a |- a",
        "double negation elimination; holds in every ortholattice, fails "
        "intuitionistically");
    add("em", "|- a | ~a",
        "excluded middle; holds in every ortholattice, fails intuitionistically");
    add("wem", "|- ~a | ~~a",
        "weak excluded middle; holds in every ortholattice, fails in some "
        "Heyting lattices");
    add("orthomodular", "(a | ~a) & (a | b) |- a | (~a & (a | b))",
        "orthomodularity with an excluded-middle guard; intuitionistically "
        "valid, fails in the hexagon ortholattice");
    add("orthomodular_ortho", "a | b |- a | (~a & (a | b))",
        "orthomodularity as stated over orthologic; fails in the hexagon "
        "ortholattice and is not intuitionistically valid");
    return v;
  }();
  return registry;
}

const NamedAxiom& get_axiom(const std::string& name) {
  for (const NamedAxiom& a : axiom_registry())
    if (a.name == name) return a;
  throw std::out_of_range("unknown axiom '" + name + "'");
}

std::vector<Sequent> translate(const AxiomatizationPair& pair) {
  std::vector<Sequent> out;
  out.reserve(pair.ortho_axioms.size() + pair.int_axioms.size() + 1);
  for (const Sequent& s : pair.ortho_axioms)
    out.push_back(Sequent{s.lhs, Formula::neg(Formula::neg(s.rhs))});
  for (const Sequent& s : pair.int_axioms)
    out.push_back(Sequent{s.lhs, Formula::disj(s.rhs, Formula::neg(s.rhs))});
  out.push_back(get_axiom("ex").sequent);
  return out;
}

DecompositionSubstitutions derive_decomposition_instances() {
  DecompositionSubstitutions d;
  d.toward_nu = Substitution{
      {"c", Formula::top()},
      {"e", Formula::top()},
      {"b", Formula::bottom()},
      {"f", Formula::var("q")},
      {"a", Formula::neg(Formula::neg(Formula::var("p")))},
  };
  d.toward_vi = Substitution{{"b", Formula::bottom()}};
  d.toward_cl = Substitution{{"e", Formula::top()}, {"f", Formula::top()}};
  return d;
}

}  // namespace exlogic
