#pragma once

// The line-oriented algebra description read by the command-line tool:
//
//   # comment
//   field 2
//   vertices 1 2 3
//   arrow a : 1 -> 2
//   arrow b : 2 -> 3
//   relation b*a
//   relation 2*x*x - y*y
//   option budget 2
//
// Paths are written right to left, so "b*a" is a followed by b. Every
// error is a ParseError with a 1-based line and column.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csheaf/algebra.hpp"

namespace csheaf {

struct SpecTerm {
  std::int64_t coefficient = 1;
  std::vector<std::string> arrows;  // as written, left to right
};

struct SpecRelation {
  std::vector<SpecTerm> terms;
  std::size_t line = 0;
};

struct SpecArrow {
  std::string name;
  std::string source;
  std::string target;
};

struct SpecOptions {
  std::optional<Index> budget;
  std::optional<Index> jmax;
  std::optional<std::uint64_t> seed;
};

struct AlgebraSpec {
  Residue characteristic = 0;
  std::vector<std::string> vertices;
  std::vector<SpecArrow> arrows;
  std::vector<SpecRelation> relations;
  SpecOptions options;
};

AlgebraSpec parse_spec(const std::string& text);

/// Builds the algebra. A spec from parse_spec is well formed, but the algebra
/// can still fail to be finite-dimensional (NotFiniteDimensional).
BoundAlgebra build_algebra(const AlgebraSpec& spec);

/// Renders a spec back to the text format (parse_spec round-trips it).
std::string format_spec(const AlgebraSpec& spec);

}  // namespace csheaf
