#pragma once

// Module samples shared by the test suites.

#include "csheaf/rep.hpp"

namespace fx {

using namespace csheaf;

/// Simples, indecomposable projectives and injectives.
inline std::vector<Representation> basic_modules(const BoundAlgebra& alg) {
  std::vector<Representation> out;
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    out.push_back(simple(alg, v));
    out.push_back(indecomposable_projective(alg, v));
    out.push_back(indecomposable_injective(alg, v));
  }
  return out;
}

/// Iso classes with per-vertex dimension at most `max_dim`, plus the basic modules.
inline std::vector<Representation> sample_modules(const BoundAlgebra& alg, Index max_dim) {
  auto out = iso_class_representatives(enumerate_representations(alg, max_dim));
  for (auto& m : basic_modules(alg)) out.push_back(m);
  return out;
}

/// Every element of M as a total vector (M must be small).
inline std::vector<Vec> all_vectors(const Representation& m) {
  const Index d = m.total_dimension();
  const Residue p = m.modulus();
  std::vector<Vec> out;
  Vec x(d, 0);
  while (true) {
    out.push_back(x);
    Index k = 0;
    while (k < d) {
      x[k] = (x[k] + 1) % p;
      if (x[k] != 0) break;
      ++k;
    }
    if (k == d) break;
  }
  return out;
}

}  // namespace fx
