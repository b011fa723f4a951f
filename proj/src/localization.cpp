#include "csheaf/localization.hpp"

#include <algorithm>
#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

LocalizingSubcategory::LocalizingSubcategory(BoundAlgebra alg, VertexSet torsion_vertices)
    : alg_(std::move(alg)), vertices_(torsion_vertices) {
  if (!alg_.valid()) throw InvalidArgument("localizing subcategory of an empty algebra");
  if (!vertices_.is_subset_of(VertexSet::full(alg_.vertex_count()))) {
    throw InvalidArgument("localizing subcategory names a vertex outside the quiver");
  }
}

namespace {

void require_algebra(const LocalizingSubcategory& l, const Representation& m, const char* where) {
  if (!(l.algebra() == m.algebra())) throw InvalidArgument(std::string(where) + ": module over a different algebra");
}

void require_same(const LocalizingSubcategory& a, const LocalizingSubcategory& b, const char* where) {
  if (!(a.algebra() == b.algebra())) throw InvalidArgument(std::string(where) + ": subcategories of different algebras");
}

}  // namespace

Subobject torsion_radical(const LocalizingSubcategory& l, const Representation& m) {
  require_algebra(l, m, "torsion_radical");
  const Index verts = m.dims().size();
  std::vector<Mat> torsion;
  for (Index v = 0; v < verts; ++v) torsion.emplace_back(0, m.dim(v), m.modulus());
  // Pull back the S-socle of M / T until it vanishes.
  while (true) {
    const QuotientObject q = quotient(m, torsion);
    const Subobject soc = socle_in(q.object, l.vertices());
    if (soc.object.is_zero()) break;
    const auto img = image_subspaces(soc.inclusion);
    for (Index v = 0; v < verts; ++v) {
      if (m.dim(v) == 0) continue;
      torsion[v] = preimage(q.projection.block(v), img[v].rows() ? img[v] : Mat(0, q.object.dim(v), m.modulus()));
    }
  }
  return subrepresentation(m, torsion);
}

bool is_member(const LocalizingSubcategory& l, const Representation& m) {
  require_algebra(l, m, "is_member");
  return m.support().is_subset_of(l.vertices());
}

bool is_torsion_free(const LocalizingSubcategory& l, const Representation& m) {
  return socle_in(m, l.vertices()).object.is_zero();
}

LocalizingSubcategory meet(const LocalizingSubcategory& a, const LocalizingSubcategory& b) {
  require_same(a, b, "meet");
  return {a.algebra(), a.vertices() & b.vertices()};
}

LocalizingSubcategory join(const LocalizingSubcategory& a, const LocalizingSubcategory& b) {
  require_same(a, b, "join");
  return {a.algebra(), a.vertices() | b.vertices()};
}

DisjointDecomposition decompose_disjoint(const LocalizingSubcategory& l1, const LocalizingSubcategory& l2,
                                         const Representation& m) {
  require_same(l1, l2, "decompose_disjoint");
  if (!(l1.vertices() & l2.vertices()).empty()) {
    throw InvalidArgument("decompose_disjoint: the vertex sets are not disjoint");
  }
  if (!is_member(join(l1, l2), m)) throw InvalidArgument("decompose_disjoint: module is not in the join");
  DisjointDecomposition out{torsion_radical(l1, m), torsion_radical(l2, m), {}, {}};
  out.sum = direct_sum({out.first.object, out.second.object}, m.algebra());
  out.iso = map_out_of_sum(out.sum, {out.first.inclusion, out.second.inclusion});
  if (!out.iso.is_isomorphism()) {
    throw HypothesisViolation("decompose_disjoint: the torsion parts do not split " + describe(m) +
                              " (the pair is not stable)");
  }
  return out;
}

bool is_stable(const LocalizingSubcategory& l) {
  for (Index v : l.vertices().members()) {
    if (!indecomposable_injective(l.algebra(), v).support().is_subset_of(l.vertices())) return false;
  }
  return true;
}

LocalizedObject localize(const LocalizingSubcategory& l, const Representation& m) {
  require_algebra(l, m, "localize");
  const Subobject t = torsion_radical(l, m);
  const QuotientObject bar = quotient(m, t);
  const InjectiveHull hull = injective_hull(bar.object);
  const QuotientObject rest = cokernel(hull.embedding);
  const Subobject rest_torsion = torsion_radical(l, rest.object);
  const auto torsion_img = image_subspaces(rest_torsion.inclusion);
  std::vector<Mat> closure_spaces;
  for (Index v = 0; v < m.dims().size(); ++v) {
    const Index ev = hull.object.dim(v);
    if (ev == 0) {
      closure_spaces.emplace_back(0, 0, m.modulus());
      continue;
    }
    const Mat target = torsion_img[v].rows() ? torsion_img[v] : Mat(0, rest.object.dim(v), m.modulus());
    closure_spaces.push_back(preimage(rest.projection.block(v), target));
  }
  const Subobject closure = subrepresentation(hull.object, closure_spaces);
  const ModuleMap unit = factor_through(compose(hull.embedding, bar.projection), closure);
  return LocalizedObject{closure.object, unit};
}

bool is_closed(const LocalizingSubcategory& l, const Representation& m) {
  if (!is_torsion_free(l, m)) return false;
  return localize(l, m).unit.is_isomorphism();
}

QuotientHom quotient_hom(const LocalizingSubcategory& l, const Representation& m, const Representation& n) {
  QuotientHom out{localize(l, m), localize(l, n), {}};
  out.basis = hom_space(out.source.closure, out.target.closure);
  return out;
}

ModuleMap localize_map(const ModuleMap& f, const LocalizedObject& lm, const LocalizedObject& ln) {
  if (!(f.source() == lm.unit.source()) || !(f.target() == ln.unit.source())) {
    throw InvalidArgument("localize_map: map does not match the localized objects");
  }
  const auto homs = hom_space(lm.closure, ln.closure);
  const Vec rhs = compose(ln.unit, f).coordinates();
  const Residue p = f.source().modulus();
  if (rhs.empty()) return ModuleMap::zero(lm.closure, ln.closure);
  Mat system(rhs.size(), homs.size(), p);
  for (Index i = 0; i < homs.size(); ++i) {
    const Vec c = compose(homs[i], lm.unit).coordinates();
    for (Index r = 0; r < c.size(); ++r) system(r, i) = c[r];
  }
  if (homs.empty()) {
    if (std::any_of(rhs.begin(), rhs.end(), [](Residue x) { return x != 0; })) {
      throw TheoremViolation("localize_map: no extension to the closure");
    }
    return ModuleMap::zero(lm.closure, ln.closure);
  }
  auto coeffs = solve(system, rhs);
  if (!coeffs) throw TheoremViolation("localize_map: no extension to the closure");
  if (rank(system) != homs.size()) throw TheoremViolation("localize_map: extension is not unique");
  return combine(homs, *coeffs, lm.closure, ln.closure);
}

InjectiveSplitting injective_splitting_check(const LocalizingSubcategory& l, const Representation& y) {
  require_algebra(l, y, "injective_splitting_check");
  if (!is_stable(l)) {
    throw HypothesisViolation("injective_splitting_check: subcategory " + format_vertices(l.algebra().quiver(), l.vertices()) +
                              " is not stable");
  }
  if (!is_injective(y)) throw InvalidArgument("injective_splitting_check: module is not injective");
  InjectiveSplitting out;
  out.torsion = torsion_radical(l, y);
  out.section = localize(l, y);
  // retraction r with r after inclusion = id
  const auto homs = hom_space(y, out.torsion.object);
  const Vec target = ModuleMap::identity(out.torsion.object).coordinates();
  if (target.empty()) {
    out.retraction = ModuleMap::zero(y, out.torsion.object);
  } else {
    Mat system(target.size(), homs.size(), y.modulus());
    for (Index i = 0; i < homs.size(); ++i) {
      const Vec c = compose(homs[i], out.torsion.inclusion).coordinates();
      for (Index r = 0; r < c.size(); ++r) system(r, i) = c[r];
    }
    auto coeffs = homs.empty() ? std::nullopt : solve(system, target);
    if (!coeffs) throw TheoremViolation("injective_splitting_check: torsion part is not a direct summand");
    out.retraction = combine(homs, *coeffs, y, out.torsion.object);
  }
  out.sum = direct_sum({out.torsion.object, out.section.closure}, y.algebra());
  out.iso = map_into_sum(out.sum, {out.retraction, out.section.unit});
  if (!out.iso.is_isomorphism()) {
    throw TheoremViolation("injective_splitting_check: Y is not t(Y) + ST(Y) for " + describe(y));
  }
  return out;
}

Check ext_orthogonality_check(const LocalizingSubcategory& l0, const LocalizingSubcategory& l1,
                              const std::vector<Representation>& samples, Index jmax) {
  require_same(l0, l1, "ext_orthogonality_check");
  const auto& q = l0.algebra().quiver();
  if (!(l0.vertices() & l1.vertices()).empty()) {
    throw HypothesisViolation("ext_orthogonality_check: vertex sets are not disjoint");
  }
  if (!is_stable(l0) || !is_stable(l1)) throw HypothesisViolation("ext_orthogonality_check: both subcategories must be stable");
  Check check("ext orthogonality " + format_vertices(q, l0.vertices()) + " vs " + format_vertices(q, l1.vertices()));
  for (const auto& x0 : samples) {
    if (!is_member(l0, x0)) continue;
    for (const auto& x1 : samples) {
      if (!is_member(l1, x1)) continue;
      for (Index j = 0; j <= jmax; ++j) {
        const Index d = ext_dim(x0, x1, j, jmax);
        check.expect(d == 0, [&] {
          return "Ext^" + std::to_string(j) + "(" + describe(x0) + ", " + describe(x1) + ") has dimension " +
                 std::to_string(d);
        });
      }
    }
  }
  return check;
}

}  // namespace csheaf
