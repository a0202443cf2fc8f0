#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exlogic/lattice.hpp"

namespace exlogic {

// Equivalence relation on lattice elements together with the result of an
// exhaustive meet/join compatibility check.
struct Congruence {
  std::vector<int> class_of;              // element index -> class id
  std::vector<std::vector<int>> classes;  // class id -> ascending members
  bool compatible = false;
  std::string violation;  // first compatibility failure, empty when compatible

  int class_count() const { return static_cast<int>(classes.size()); }
};

// a ~ b iff ~a = ~b. Classes are numbered by first appearance, so class ids
// increase with the smallest element index they contain.
Congruence resim_congruence(const FiniteLattice& lattice);

// Quotient by a compatible congruence. Each class is named after its minimal
// member with a "*" suffix. Throws LatticeError when the congruence is
// incompatible, when negation is not constant on classes, or when the
// induced order fails the lattice laws.
FiniteLattice quotient(const FiniteLattice& lattice, const Congruence& congruence);

// Elements m != 0 with m <= a|b implying m <= a or m <= b, ascending. These
// are exactly the generators of the proper prime filters: every prime filter
// of a finite lattice is the up-set of a unique join-prime.
std::vector<int> join_primes(const FiniteLattice& lattice);

// Algebra of down-closed sets of join-primes generated by the principal
// down-sets hat(a) = { p join-prime : p <= a } and closed under intersection,
// union, and the negation ~A = { p : no q in A has q <= p }. Sets are stored
// as bit masks over the join-prime list.
struct DownSetAlgebra {
  std::vector<int> primes;          // lattice element indices, ascending
  std::vector<uint64_t> carrier;    // member sets as masks, ascending
  std::vector<uint64_t> generator;  // lattice element -> its hat mask
  FiniteLattice algebra;            // carrier materialized as a lattice

  int index_of_mask(uint64_t mask) const;
  int generator_index(int element) const;  // carrier index of hat(element)
};

// Throws LatticeError("resource", ...) past 62 join-primes or when the
// closure exceeds kDownSetCarrierLimit members.
inline constexpr size_t kDownSetCarrierLimit = size_t{1} << 16;
DownSetAlgebra heyting_algebra(const FiniteLattice& lattice);

struct EmbeddingDiagnostics {
  bool congruence_compatible = false;
  bool quotient_built = false;
  bool quotient_is_ortholattice = false;
  bool downset_is_heyting = false;
  bool homomorphism = false;
  bool injective = false;
  bool order_reflecting = false;
  std::vector<std::string> notes;

  bool all_pass() const {
    return congruence_compatible && quotient_built && quotient_is_ortholattice &&
           downset_is_heyting && homomorphism && injective && order_reflecting;
  }
};

struct EmbeddingResult {
  Congruence congruence;
  std::optional<FiniteLattice> ortho_part;  // quotient by ~, when it exists
  DownSetAlgebra heyting_part;
  std::optional<FiniteLattice> product_part;  // ortho_part x heyting_part
  std::vector<int> map;                       // element -> product index
  EmbeddingDiagnostics diagnostics;
};

// e(a) = (class of a, hat(a)) into (L/~) x A_L. On lattices validating the
// six-variable axiom every diagnostic passes; elsewhere the result reports
// which structure or preservation property breaks.
EmbeddingResult ex_embedding(const FiniteLattice& lattice);

struct InterpolantResult {
  bool preconditions_ok = false;
  std::string note;
  std::optional<int> interpolant;
  bool verified = false;  // c <= a, c <= b, a <= ~~c, b <= ~~c
};

// For ~a = ~b in a lattice validating ~~p & ~~q <= ~~(p & q), the meet
// c = a & b satisfies c <= a, c <= b, a <= ~~c, and b <= ~~c.
InterpolantResult interpolant(const FiniteLattice& lattice, int a, int b);

struct PrimeFilterResult {
  bool preconditions_ok = false;
  std::string note;
  std::optional<int> prime;  // generator of the found prime filter
};

// For a proper filter of f and proper ideal of i with f !<= i, a <= i, and
// f <= ~~a, a lattice validating a & (c|e) & ~~f <= (a&c) | (a&e) | f has a
// join-prime m with m <= f and m !<= i.
PrimeFilterResult separating_prime_filter(const FiniteLattice& lattice, int filter_gen,
                                          int ideal_gen, int a);

// For a join-prime p with p !<= ~a, a lattice validating the guarded excluded
// middle axiom has a join-prime q with q <= p and q <= a.
PrimeFilterResult extend_prime_filter(const FiniteLattice& lattice, int prime_gen, int a);

struct AddTopResult {
  FiniteLattice lattice;      // input plus a fresh top appended last
  std::vector<int> collapse;  // new element index -> old element index
  int old_top = -1;
  int new_top = -1;
};

// Adjoins a new top t with ~t = 0 and ~0 = t; everything else keeps its
// negation. The new top inherits the old top's name and the old top gains a
// "*" suffix. collapse sends the new top back onto the old one and is a
// surjective homomorphism onto the input.
AddTopResult add_top(const FiniteLattice& lattice);

}  // namespace exlogic
