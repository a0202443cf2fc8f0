#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlogic/lattice.hpp"

namespace exlogic {

// Size ceilings keep exhaustive sweeps desk-scale. EXLOGIC_ENUM_CEILING
// overrides both when set to a positive integer.
int order_enumeration_ceiling();        // default 10
int fundamental_enumeration_ceiling();  // default 8

class EnumerationLimitError : public std::runtime_error {
 public:
  explicit EnumerationLimitError(const std::string& message);
};

struct EnumerationSpec {
  int max_size = 6;
  std::string class_filter = "fundamental";  // LatticeClassReport flag name or "all"
  bool canonicalize = true;  // classify_corpus always canonicalizes; the flag
                             // matters when driving enumerate_wpc directly
};

// Exact isomorphism key: the lexicographically minimal order-matrix plus
// negation-vector encoding over element permutations. Iso-invariant
// signatures (degrees, negation degrees, refined by neighborhoods) restrict
// the permutations without affecting exactness. Keys contain only digits,
// ';', '.', so they embed safely in CSV.
std::string canonical_key(const FiniteLattice& lattice);

// Every bounded lattice with 1..max_size elements, one representative per
// isomorphism class, ordered by size then canonical key. No negation tables.
std::vector<FiniteLattice> enumerate_lattices(int max_size);

// Every map satisfying antitonicity, semi-complementation, and double
// negation introduction on the given order. canonicalize drops isomorphic
// duplicates and sorts by canonical key; otherwise results arrive in raw
// backtracking order.
std::vector<FiniteLattice> enumerate_wpc(const FiniteLattice& order, bool canonicalize = true);

// Every fundamental lattice with 1..max_size elements up to isomorphism,
// ordered by size then canonical key.
std::vector<FiniteLattice> enumerate_fundamental(int max_size);

struct CorpusRow {
  std::string key;
  FiniteLattice lattice;
  LatticeClassReport report;
};

struct ComboSummary {
  int count = 0;
  int min_size = -1;     // size of the smallest lattice in this combination
  std::string min_key;   // canonical key of the first smallest member
};

struct CorpusTable {
  std::vector<CorpusRow> rows;                 // size then canonical key
  std::map<std::string, int> flag_counts;      // flag name -> holding lattices
  std::map<std::string, ComboSummary> combos;  // "nu=_,vi=_,cl=_" -> summary

  // Header key,size,<13 flag columns>; one 0/1 row per lattice.
  std::string to_csv() const;
};

// Enumerates fundamental lattices up to spec.max_size, classifies each, and
// keeps the rows whose class_filter flag holds ("all" and "fundamental" keep
// everything). Aggregations cover the kept rows.
CorpusTable classify_corpus(const EnumerationSpec& spec);

}  // namespace exlogic
