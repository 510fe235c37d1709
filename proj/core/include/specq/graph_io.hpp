#pragma once

#include <stdexcept>
#include <string>

#include "specq/graph.hpp"

namespace specq {

// Raised on malformed graph6/sparse6 input; offset is the byte position of
// the offending character in the string as given.
struct GraphParseError : std::invalid_argument {
  size_t offset;
  GraphParseError(const std::string& what, size_t off)
      : std::invalid_argument(what), offset(off) {}
};

// graph6 / sparse6 strings as used by nauty and friends; only orders up to 32
// are accepted on input. Writers emit no trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);  // optional >>graph6<< header

std::string to_sparse6(const Graph& g);  // leading ':'
Graph from_sparse6(const std::string& s);

// Dispatch on the leading ':' (and strip an optional format header).
Graph parse_graph(const std::string& line);

// Human-readable adjacency matrix, one row per line of 0/1 characters.
std::string to_adjacency_text(const Graph& g);

// Adjacency list: first line is the order, then one "v: u u ..." line per
// vertex. The reader accepts blank lines, ignores vertices with no line of
// their own, and requires every edge to appear from both endpoints.
std::string to_adjacency_list(const Graph& g);
Graph from_adjacency_list(const std::string& text);

}  // namespace specq
