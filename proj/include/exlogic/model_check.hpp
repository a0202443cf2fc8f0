#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlogic/formula.hpp"
#include "exlogic/lattice.hpp"

namespace exlogic {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when |L|^k exceeds the evaluation budget; the message suggests the
// prover as the fallback.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr unsigned long long kDefaultEvaluationBudget = 100000000ULL;

struct Valuation {
  const FiniteLattice* lattice = nullptr;
  std::map<std::string, int> assignment;
};

// Homomorphic extension of the assignment. Throws EvalError on an unbound
// variable or when the formula needs a negation the lattice lacks.
int evaluate(const Formula& f, const Valuation& v);

struct Witness {
  std::vector<std::pair<std::string, int>> assignment;  // sorted by variable
  int lhs = -1, rhs = -1;
  std::string detail(const FiniteLattice& lattice) const;
};

// Sequents are checked as schemas: every variable ranges over every element.
// Assignments enumerate in odometer order (variables sorted by name, first
// variable most significant, elements in lattice order), so the first
// witness is deterministic.
std::optional<Witness> find_counterexample(const Sequent& s, const FiniteLattice& lattice,
                                           unsigned long long budget = kDefaultEvaluationBudget);

bool sequent_valid(const Sequent& s, const FiniteLattice& lattice,
                   unsigned long long budget = kDefaultEvaluationBudget);

inline bool schema_valid(const Sequent& s, const FiniteLattice& lattice,
                         unsigned long long budget = kDefaultEvaluationBudget) {
  return sequent_valid(s, lattice, budget);
}

struct CountermodelResult {
  std::optional<Witness> witness;
  int lattice_index = -1;  // index into the searched sequence when found
  size_t lattices_checked = 0;
};

// Searches the given lattices in order and stops at the first witness.
CountermodelResult countermodel_search(const Sequent& s,
                                       const std::vector<FiniteLattice>& lattices,
                                       unsigned long long budget = kDefaultEvaluationBudget);

}  // namespace exlogic
