#pragma once

#include <string>

#include "exlogic/lattice.hpp"

namespace exlogic {

// JSON lattice file format:
//   {
//     "elements": ["0", "a", "1"],            // file order is significant
//     "covers": [["0","a"], ["a","1"]],       // or "leq" for a full relation
//     "neg": {"a": "0"},                      // entries for 0/1 may be omitted
//     "metadata": {"name": "chain3"}          // optional string map
//   }
LatticeData lattice_data_from_json(const std::string& json_text,
                                   const std::string& origin = "<string>");

// Parses and validates. Errors carry the file path and JSON byte offsets.
FiniteLattice load_lattice(const std::string& path);

// Canonical serialization: elements in lattice order, covers sorted by index
// pair, negation entries in element order with the forced ~0/~1 left out,
// metadata sorted by key. save(load(save(L))) is byte-identical to save(L).
std::string lattice_to_json(const FiniteLattice& lattice);
void save_lattice(const FiniteLattice& lattice, const std::string& path);

// Graphviz rendering: solid Hasse edges bottom-up, dashed red negation
// arrows (mutual pairs once with dir=both), ~0/~1 arrows omitted.
std::string lattice_to_dot(const FiniteLattice& lattice);

}  // namespace exlogic
