#pragma once

#include <string>
#include <vector>

#include "exlogic/formula.hpp"

namespace exlogic {

struct NamedAxiom {
  std::string name;
  Sequent sequent;
  std::string provenance;  // what the axiom expresses / where it matters
};

// Fixed registry: ex, nu, vi, cl, distributivity, dne, em, wem, orthomodular,
// orthomodular_ortho. Variable letters are part of the contract (witnesses
// print against them).
const std::vector<NamedAxiom>& axiom_registry();
const NamedAxiom& get_axiom(const std::string& name);  // throws std::out_of_range

// A finite orthologic-plus-intuitionistic presentation: lhs entries extend
// orthologic, rhs entries extend intuitionistic logic.
struct AxiomatizationPair {
  std::vector<Sequent> ortho_axioms;
  std::vector<Sequent> int_axioms;
};

// Reduction of a joint axiomatization to a single fundamental-logic theory:
// each orthologic axiom p |- q becomes p |- ~~q, each intuitionistic axiom
// p |- q becomes p |- q | ~q, and the six-variable axiom is appended.
std::vector<Sequent> translate(const AxiomatizationPair& pair);

// Substitutions that specialize the six-variable axiom toward each of the
// three component axioms; composing with T/F absorption yields sequents
// that entail nu (after a second step), vi, and cl.
struct DecompositionSubstitutions {
  Substitution toward_nu;  // c,e -> T; b -> F; f -> q; a -> ~~p
  Substitution toward_vi;  // b -> F
  Substitution toward_cl;  // e,f -> T
};
DecompositionSubstitutions derive_decomposition_instances();

}  // namespace exlogic
