#pragma once

// The five shared test algebras.

#include "csheaf/algebra.hpp"

namespace fx {

using namespace csheaf;

// 1 -a-> 2 over F2
inline BoundAlgebra a2() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  return build_algebra(q, 2, {});
}

// 1 -a-> 2 -b-> 3, b*a = 0, over F2
inline BoundAlgebra a3() {
  Quiver q(3);
  auto a = q.add_arrow("a", 0, 1);
  auto b = q.add_arrow("b", 1, 2);
  return build_algebra(q, 2, {Relation{{RelationTerm{1, path_from_written(q, {b, a})}}}});
}

// one loop x with x^2 = 0, over F3
inline BoundAlgebra loop2() {
  Quiver q(1);
  auto x = q.add_arrow("x", 0, 0);
  return build_algebra(q, 3, {Relation{{RelationTerm{1, path_from_written(q, {x, x})}}}});
}

// two arrows a, b: 1 -> 2 over F2
inline BoundAlgebra kron() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 0, 1);
  return build_algebra(q, 2, {});
}

// two vertices, no arrows, over F2
inline BoundAlgebra two_point() { return build_algebra(Quiver(2), 2, {}); }

struct Named {
  const char* name;
  BoundAlgebra (*make)();
};

inline const Named all[] = {{"A2", a2}, {"A3", a3}, {"LOOP2", loop2}, {"KRON", kron}, {"2PT", two_point}};

}  // namespace fx
