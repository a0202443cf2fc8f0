#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "exlogic/formula.hpp"

namespace exlogic {

enum class LogicId { Fundamental, Ortho, Int, Ex, Classical };

LogicId logic_from_name(const std::string& name);  // throws std::out_of_range
const char* logic_name(LogicId id);

struct SaturationOptions {
  int negation_depth = 2;  // universe closes under ~ up to this depth
};

// Least fixpoint of the thirteen introduction-elimination rules over the
// sequent's negation-closed subformula universe; the ortho variant also
// seeds ~~phi |- phi. Sound for the corresponding logic; completeness is
// limited by the universe (cross-validated against lattice search).
class SaturationTable {
 public:
  const std::vector<Formula>& universe() const { return universe_; }
  bool derivable(const Formula& lhs, const Formula& rhs) const;
  bool goal_derivable() const;
  const Sequent& goal() const { return goal_; }

  // Derivation of a derivable pair, one rule application per line, premises
  // before conclusions, citing the rule numbers (1)-(13) or "dne".
  std::vector<std::string> explain(const Formula& lhs, const Formula& rhs) const;
  std::vector<std::string> explain_goal() const;

 private:
  friend SaturationTable saturate(const Sequent&, LogicId, const SaturationOptions&);
  int index_of(const Formula& f) const;

  Sequent goal_{Formula::top(), Formula::top()};
  std::vector<Formula> universe_;
  int u_ = 0;
  std::vector<char> derived_;
  // per derived pair: rule tag and up to two premise pair ids (-1 if none)
  std::vector<int> rule_, prem1_, prem2_;
};

SaturationTable saturate(const Sequent& goal, LogicId logic = LogicId::Fundamental,
                         const SaturationOptions& options = {});

// Rule-saturation derivability over the depth-bounded universe. Sound for
// fundamental logic; may under-approximate beyond the universe.
bool decide_fundamental(const Sequent& s, const SaturationOptions& options = {});

// Complete decision for orthologic: saturation of two-formula annotated
// sequents (the cut-free-complete calculus) over the goal's subformulas.
bool decide_ortho(const Sequent& s);

// Complete decision for the implication-free fragment of intuitionistic
// logic: terminating contraction-free root-first search (G4ip) on
// antecedent -> consequent, with ~A read as A -> F.
bool decide_int(const Sequent& s);

struct ExVerdict {
  bool ortho_valid = false;
  bool int_valid = false;
  bool ex_valid() const { return ortho_valid && int_valid; }
};

// Joint validity of orthologic and intuitionistic logic; equals validity in
// all Ex-lattices.
ExVerdict decide_ex(const Sequent& s);

// Two-valued truth tables. Throws ResourceLimitError when the sequent has
// more variables than max_variables.
bool decide_classical(const Sequent& s, int max_variables = 24);

bool decide(LogicId logic, const Sequent& s);

// Memoizes decide() per logic, keyed by printed sequent text.
class VerdictCache {
 public:
  bool decide(LogicId logic, const Sequent& s);
  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }

 private:
  std::unordered_map<std::string, bool> cache_;
  size_t hits_ = 0, misses_ = 0;
};

}  // namespace exlogic
