#pragma once

#include <stdexcept>
#include <string>

#include "specq/graph.hpp"

namespace specq {

struct FamilyParseError : std::invalid_argument {
  FamilyParseError(const std::string& what, size_t offset)
      : std::invalid_argument(what), offset(offset) {}
  size_t offset;  // byte position in the input
};

// Builds a graph from a one-line family expression.
//
//   expr  := item ('+' item)*            disjoint union
//   item  := [INT '*'] atom              repetition, e.g. 3*K1
//   atom  := '(' expr ')'
//          | 'join' '(' expr ',' expr ')'
//          | 'complement' '(' expr ')'
//          | 'K' INT ['-e']              complete graph, optionally minus an edge
//          | 'K' INT ',' INT ['-e']      complete bipartite (no spaces around ',')
//          | 'K' '(' INT {',' INT} ')'   complete multipartite
//          | 'S' INT                     star on INT vertices
//          | 'P' INT                     path
//          | 'C' INT                     cycle
//          | 'G' '(' INT ',' INT ',' INT ')'   double starlike tree G(p,l,q)
//
// Whitespace is free between tokens, except inside the compact forms
// K2,5 and K4-e. Throws FamilyParseError on malformed input.
Graph parse_family(const std::string& text);

}  // namespace specq
