#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exlogic {

// Raw lattice description prior to validation. Element order is significant:
// it fixes witness-search order everywhere downstream.
struct LatticeData {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;  // x <= y pairs
  bool order_is_covers = true;  // covers are transitively closed on validation
  std::map<std::string, std::string> negation;  // entries for 0/1 may be omitted
  std::map<std::string, std::string> metadata;
};

class LatticeError : public std::runtime_error {
 public:
  LatticeError(std::string law_, std::string detail_);
  std::string law;     // "poset", "bounds", "meet", "join", "negation-total",
                       // "antitonicity", "semi-complementation",
                       // "double-negation-introduction", "name"
  std::string detail;  // witness description using element names
};

// Finite bounded lattice, optionally with a weak pseudo-complement. Immutable
// after construction; meet/join/neg are table lookups.
class FiniteLattice {
 public:
  // Empty placeholder; every accessor assumes a from_leq/validate instance.
  FiniteLattice() = default;

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view element_name) const;

  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  bool has_negation() const { return !neg_.empty(); }
  int neg(int a) const { return neg_[a]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  void set_metadata(std::string key, std::string value) { metadata_[std::move(key)] = std::move(value); }

  // Hasse diagram edges (lower, upper), lexicographic by index pair.
  std::vector<std::pair<int, int>> covers() const;

  // Builds from a full reflexive order matrix (row-major, leq[a*n+b]).
  // Verifies poset laws, bounds, meet/join existence, and, when a negation
  // is supplied, totality plus the three weak-pseudo-complement laws.
  // Throws LatticeError.
  static FiniteLattice from_leq(std::vector<std::string> names,
                                std::vector<char> leq,
                                std::vector<int> negation,
                                std::map<std::string, std::string> metadata = {});

  // Raw table access for hot loops.
  const int* meet_table() const { return meet_.data(); }
  const int* join_table() const { return join_.data(); }
  const int* neg_table() const { return neg_.data(); }

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  std::vector<int> neg_;
  int bottom_ = 0, top_ = 0;
  std::map<std::string, std::string> metadata_;
};

// Resolves names, closes covers transitively, auto-completes ~0=1 and ~1=0
// (erroring if the file contradicts them), and checks all laws.
FiniteLattice validate(const LatticeData& data);

struct Counterexample {
  std::vector<std::pair<std::string, int>> assignment;  // letter -> element
  int lhs = -1, rhs = -1;  // evaluated sides where applicable
  std::string detail;
};

// Classification flags with first-found witnesses for every failed property.
// Witness search order matches model_check: axiom letters sorted, elements
// in lattice order, last letter fastest.
struct LatticeClassReport {
  bool is_fundamental = false;
  bool is_ortholattice = false;
  bool is_heyting = false;
  bool is_ex = false;
  bool holds_nu = false;
  bool holds_vi = false;
  bool holds_cl = false;
  bool is_distributive = false;
  bool has_pseudocomplement = false;
  bool is_orthomodular = false;
  bool holds_dne = false;
  bool holds_em = false;
  bool holds_wem = false;

  // keyed by flag name: "fundamental", "ortholattice", "heyting", "ex", "nu",
  // "vi", "cl", "distributive", "pseudocomplement", "orthomodular", "dne",
  // "em", "wem"
  std::map<std::string, Counterexample> witnesses;

  bool flag(std::string_view name) const;
  static const std::vector<std::string>& flag_names();
};

LatticeClassReport classify(const FiniteLattice& lattice);

// Componentwise product; element (a,b) sits at index a*B.size()+b and is
// named "(a,b)". Negation present only when both factors carry one.
FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B);
int product_index(const FiniteLattice& B, int a, int b);

struct HomReport {
  bool is_homomorphism = false;  // preserves meet, join, neg, bottom, top
  bool injective = false;
  bool surjective = false;
  bool order_reflecting = false;  // h(a) <= h(b) implies a <= b
  std::string first_violation;
  bool order_embedding() const { return is_homomorphism && injective && order_reflecting; }
};

// map[i] is the image in `to` of element i of `from`.
HomReport check_homomorphism(const std::vector<int>& map, const FiniteLattice& from,
                             const FiniteLattice& to);

}  // namespace exlogic
