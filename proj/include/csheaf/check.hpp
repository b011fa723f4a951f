#pragma once

// Outcomes of the verification routines, plus the formatting used in
// counterexample payloads.

#include <string>
#include <vector>

#include "csheaf/rep.hpp"

namespace csheaf {

enum class Outcome { pass, fail, undecided };

const char* outcome_name(Outcome o);

/// One named verification: how many cases were examined and, on failure,
/// the first counterexample.
struct Check {
  std::string name;
  Outcome outcome = Outcome::pass;
  Index cases = 0;
  std::string detail;

  explicit Check(std::string n) : name(std::move(n)) {}

  /// Counts one case; `describe` is only called for the first failure.
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && outcome != Outcome::fail) {
      outcome = Outcome::fail;
      detail = describe();
    }
  }
  void fail(const std::string& why) {
    if (outcome != Outcome::fail) {
      outcome = Outcome::fail;
      detail = why;
    }
  }
  void undecided(const std::string& why) {
    if (outcome == Outcome::pass) {
      outcome = Outcome::undecided;
      detail = why;
    }
  }
  bool passed() const { return outcome == Outcome::pass; }
};

/// fail dominates undecided, which dominates pass.
Outcome combine_outcomes(const std::vector<Check>& checks);

std::string format_vertices(const Quiver& q, VertexSet s);
std::string format_dims(const std::vector<Index>& dims);
/// Dimension vector plus every nonzero arrow matrix.
std::string describe(const Representation& m);

}  // namespace csheaf
