#include "csheaf/central.hpp"

#include <algorithm>
#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

namespace {

Vec slice(const Vec& v, Index start, Index length) { return Vec(v.begin() + start, v.begin() + start + length); }

void put(Vec& v, Index start, const Vec& part) { std::copy(part.begin(), part.end(), v.begin() + start); }

Vec row_combination(const Mat& basis, const Vec& coeffs) {
  Vec out(basis.cols(), 0);
  const Residue p = basis.modulus();
  for (Index i = 0; i < basis.rows(); ++i) {
    if (coeffs[i] == 0) continue;
    for (Index c = 0; c < basis.cols(); ++c) out[c] = modp::add(out[c], modp::mul(coeffs[i], basis(i, c), p), p);
  }
  return out;
}

// Canonical basis of the kernel, with the all-free case handled for empty systems.
Mat solution_space(const Mat& system, Index unknowns, Residue p) {
  if (unknowns == 0) return Mat(0, 0, p);
  if (system.rows() == 0) return Mat::identity(unknowns, p);
  return row_space(kernel_basis(system));
}

std::string vector_text(const Vec& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Adds (or subtracts) a coordinate vector into column `col` starting at `row`.
void add_column(Mat& sys, Index row, Index col, const Vec& coords, bool negate) {
  const Residue p = sys.modulus();
  for (Index r = 0; r < coords.size(); ++r) {
    const Residue c = negate ? modp::neg(coords[r], p) : coords[r];
    sys(row + r, col) = modp::add(sys(row + r, col), c, p);
  }
}

// Z(A) -> Z(End(e)) through the action of central elements; nullopt if some
// element does not land in the center.
std::optional<Mat> evaluate_center(const AlgebraCenter& zc, const Representation& e, const EndoCenter& z) {
  Mat out(z.ring.dimension(), zc.elements.size(), e.modulus());
  for (Index j = 0; j < zc.elements.size(); ++j) {
    auto coords = center_coordinates(z, element_endomorphism(e, zc.elements[j]));
    if (!coords) return std::nullopt;
    for (Index i = 0; i < coords->size(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

Check evaluation_check(const std::string& name, const AlgebraCenter& zc, const Representation& e) {
  Check check(name);
  const EndoCenter z = endo_center(e);
  const auto map = evaluate_center(zc, e, z);
  check.expect(map.has_value(), [] { return std::string("a central element acts by a non-central endomorphism"); });
  if (map) {
    check.expect(is_ring_isomorphism(zc.ring, z.ring, *map), [&] {
      return "evaluation is not a ring isomorphism: dim Z(A) = " + std::to_string(zc.ring.dimension()) +
             ", dim Z(End E) = " + std::to_string(z.ring.dimension());
    });
  }
  return check;
}

}  // namespace

// ---------------------------------------------------------------- endomorphism centers

EndoCenter endo_center(const Representation& e) {
  const Residue p = e.modulus();
  EndoCenter out;
  out.object = e;
  const Mat ends = hom_basis_matrix(e, e);
  const auto end_maps = hom_space(e, e);
  const Index h = end_maps.size();
  const Index len = ends.cols();
  // unknowns c_i; equations sum_i c_i (E_i E_j - E_j E_i) = 0 for every j
  Mat sys(h * len, h, p);
  for (Index j = 0; j < h; ++j)
    for (Index i = 0; i < h; ++i) {
      add_column(sys, j * len, i, compose(end_maps[i], end_maps[j]).coordinates(), false);
      add_column(sys, j * len, i, compose(end_maps[j], end_maps[i]).coordinates(), true);
    }
  const Mat coeffs = solution_space(sys, h, p);
  Mat coords(coeffs.rows(), len, p);
  for (Index r = 0; r < coeffs.rows(); ++r) {
    const Vec v = row_combination(ends, coeffs.row_vec(r));
    for (Index c = 0; c < len; ++c) coords(r, c) = v[c];
  }
  out.coordinates = row_space(coords);
  for (Index r = 0; r < out.coordinates.rows(); ++r)
    out.basis.push_back(ModuleMap::from_coordinates(e, e, out.coordinates.row_vec(r)));
  out.ring = subalgebra_presentation(
      out.coordinates,
      [&](const Vec& x, const Vec& y) {
        return compose(ModuleMap::from_coordinates(e, e, x), ModuleMap::from_coordinates(e, e, y)).coordinates();
      },
      ModuleMap::identity(e).coordinates());
  return out;
}

std::optional<Vec> center_coordinates(const EndoCenter& z, const ModuleMap& f) {
  if (!(f.source() == z.object) || !(f.target() == z.object)) {
    throw InvalidArgument("center_coordinates: not an endomorphism of the center's object");
  }
  if (z.coordinates.rows() == 0) {
    if (f.is_zero()) return Vec{};
    return std::nullopt;
  }
  return rref_coordinates(z.coordinates, f.coordinates());
}

// ---------------------------------------------------------------- sections

CentralSheaf::CentralSheaf(Spectrum sp) : sp_(std::move(sp)) {
  for (const auto& pt : sp_.points()) centers_.push_back(endo_center(pt.injective));
}

const SectionAlgebra& CentralSheaf::sections(SpectrumSubset a) const {
  if (!a.is_subset_of(sp_.everything())) throw InvalidArgument("sections: subset names a point outside the spectrum");
  if (auto it = cache_.find(a); it != cache_.end()) return it->second;
  const Residue p = algebra().modulus();
  SectionAlgebra f;
  f.subset = a;
  f.points = a.members();
  Index unknowns = 0;
  for (Index x : f.points) {
    f.offsets.push_back(unknowns);
    unknowns += centers_[x].ring.dimension();
  }
  // z_y v = v z_x for every v in a basis of Hom(E_x, E_y), x != y
  std::vector<Mat> blocks;
  for (Index i = 0; i < f.points.size(); ++i)
    for (Index j = 0; j < f.points.size(); ++j) {
      if (i == j) continue;
      const Index x = f.points[i], y = f.points[j];
      const auto& ex = sp_.point(x).injective;
      const auto& ey = sp_.point(y).injective;
      const auto homs = hom_space(ex, ey);
      if (homs.empty()) continue;
      const Index len = homs.front().coordinates().size();
      Mat block(homs.size() * len, unknowns, p);
      for (Index h = 0; h < homs.size(); ++h) {
        for (Index k = 0; k < centers_[y].basis.size(); ++k)
          add_column(block, h * len, f.offsets[j] + k, compose(centers_[y].basis[k], homs[h]).coordinates(), false);
        for (Index k = 0; k < centers_[x].basis.size(); ++k)
          add_column(block, h * len, f.offsets[i] + k, compose(homs[h], centers_[x].basis[k]).coordinates(), true);
      }
      blocks.push_back(std::move(block));
    }
  Mat sys(0, unknowns, p);
  for (const auto& b : blocks) sys = vstack(sys, b);
  f.basis = solution_space(sys, unknowns, p);
  Vec unit(unknowns, 0);
  for (Index i = 0; i < f.points.size(); ++i) put(unit, f.offsets[i], centers_[f.points[i]].ring.unit());
  f.ring = subalgebra_presentation(
      f.basis,
      [&](const Vec& u, const Vec& w) {
        Vec out(unknowns, 0);
        for (Index i = 0; i < f.points.size(); ++i) {
          const auto& ring = centers_[f.points[i]].ring;
          const Index d = ring.dimension();
          put(out, f.offsets[i], ring.multiply(slice(u, f.offsets[i], d), slice(w, f.offsets[i], d)));
        }
        return out;
      },
      unit);
  return cache_.emplace(a, std::move(f)).first->second;
}

ModuleMap CentralSheaf::component(const SectionAlgebra& f, const Vec& family, Index x) const {
  for (Index i = 0; i < f.points.size(); ++i) {
    if (f.points[i] != x) continue;
    const auto& z = centers_[x];
    return combine(z.basis, slice(family, f.offsets[i], z.basis.size()), z.object, z.object);
  }
  throw InvalidArgument("component: point " + std::to_string(x) + " is not in the subset");
}

Vec CentralSheaf::family(const SectionAlgebra& f, const Vec& element) const {
  if (element.size() != f.basis.rows()) throw DimensionMismatch("family: element length");
  return row_combination(f.basis, element);
}

Mat CentralSheaf::restriction(SpectrumSubset b, SpectrumSubset a) const {
  if (!a.is_subset_of(b)) throw InvalidArgument("restriction: the smaller subset is not inside the larger one");
  const auto& fb = sections(b);
  const auto& fa = sections(a);
  Mat out(fa.dimension(), fb.dimension(), algebra().modulus());
  for (Index col = 0; col < fb.dimension(); ++col) {
    const Vec big = fb.basis.row_vec(col);
    Vec small(fa.basis.cols(), 0);
    for (Index i = 0; i < fa.points.size(); ++i) {
      Index at = 0;
      while (fb.points[at] != fa.points[i]) ++at;
      put(small, fa.offsets[i], slice(big, fb.offsets[at], centers_[fa.points[i]].ring.dimension()));
    }
    if (fa.dimension() == 0) continue;
    auto coords = rref_coordinates(fa.basis, small);
    if (!coords) throw TheoremViolation("restriction: a compatible family does not restrict to one");
    for (Index r = 0; r < coords->size(); ++r) out(r, col) = (*coords)[r];
  }
  return out;
}

Vec CentralSheaf::restrict_element(SpectrumSubset b, SpectrumSubset a, const Vec& element) const {
  return restriction(b, a).apply(element);
}

Check CentralSheaf::sheaf_check(SpectrumSubset a, const std::vector<SpectrumSubset>& covering) const {
  const auto& q = algebra().quiver();
  const Residue p = algebra().modulus();
  if (!is_stable_subset(sp_, a)) throw InvalidArgument("sheaf_check: " + format_vertices(q, a) + " is not stable");
  if (covering.empty()) throw InvalidArgument("sheaf_check: empty covering");
  SpectrumSubset all;
  for (auto ai : covering) {
    if (!ai.is_subset_of(a)) throw InvalidArgument("sheaf_check: " + format_vertices(q, ai) + " is not inside the open");
    if (!is_stable_subset(sp_, ai)) throw InvalidArgument("sheaf_check: " + format_vertices(q, ai) + " is not stable");
    all = all | ai;
  }
  if (!(all == a)) throw InvalidArgument("sheaf_check: the covering does not cover " + format_vertices(q, a));

  std::string name = "sheaf condition for " + format_vertices(q, a) + " covered by";
  for (auto ai : covering) name += " " + format_vertices(q, ai);
  Check check(name);

  const Index n = covering.size();
  std::vector<Index> start(n + 1, 0);
  for (Index i = 0; i < n; ++i) start[i + 1] = start[i] + sections(covering[i]).dimension();
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<Index> pair_start{0};
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
      pair_start.push_back(pair_start.back() + sections(covering[i] & covering[j]).dimension());
    }

  const Index dim_a = sections(a).dimension();
  Mat rho(start[n], dim_a, p);
  for (Index i = 0; i < n; ++i) {
    const Mat r = restriction(a, covering[i]);
    for (Index row = 0; row < r.rows(); ++row)
      for (Index col = 0; col < r.cols(); ++col) rho(start[i] + row, col) = r(row, col);
  }
  Mat delta(pair_start.back(), start[n], p);
  for (Index k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const auto overlap = covering[i] & covering[j];
    const Mat ri = restriction(covering[i], overlap);
    const Mat rj = restriction(covering[j], overlap);
    for (Index row = 0; row < ri.rows(); ++row) {
      for (Index col = 0; col < ri.cols(); ++col) delta(pair_start[k] + row, start[i] + col) = ri(row, col);
      for (Index col = 0; col < rj.cols(); ++col)
        delta(pair_start[k] + row, start[j] + col) =
            modp::sub(delta(pair_start[k] + row, start[j] + col), rj(row, col), p);
    }
  }

  const Index rank_rho = dim_a ? rank(rho) : 0;
  check.expect(rank_rho == dim_a, [&] {
    return "F(A) -> prod F(A_i) is not injective: kills " + vector_text(kernel_basis(rho).row_vec(0));
  });
  const Mat composite = delta * rho;
  check.expect(composite.is_zero(), [] { return std::string("the two restrictions to the overlaps disagree on F(A)"); });
  const Mat equalizer = start[n] == 0 ? Mat(0, 0, p) : solution_space(delta, start[n], p);
  check.expect(equalizer.rows() == rank_rho, [&] {
    const Mat image = rank_rho ? column_space(rho) : Mat(0, start[n], p);
    for (Index r = 0; r < equalizer.rows(); ++r) {
      const Mat v = equalizer.select_rows({r});
      if (image.rows() == 0 || !subspace_contains(image, v)) {
        return "compatible local sections " + vector_text(v.row_vec(0)) + " do not glue";
      }
    }
    return std::string("equalizer dimension differs from dim F(A)");
  });
  return check;
}

std::vector<std::vector<SpectrumSubset>> stable_coverings(const Spectrum& sp, SpectrumSubset a) {
  std::vector<SpectrumSubset> inside;
  for (auto b : stable_topology(sp))
    if (b.is_subset_of(a)) inside.push_back(b);
  if (inside.size() > 24) throw InvalidArgument("stable_coverings: too many stable subsets to enumerate families");
  std::vector<std::vector<SpectrumSubset>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << inside.size()); ++mask) {
    std::vector<SpectrumSubset> family;
    SpectrumSubset all;
    for (Index i = 0; i < inside.size(); ++i)
      if ((mask >> i) & 1u) {
        family.push_back(inside[i]);
        all = all | inside[i];
      }
    if (all == a) out.push_back(std::move(family));
  }
  return out;
}

Check CentralSheaf::all_coverings_check(std::uint64_t budget) const {
  Check total("sheaf condition for every stable covering");
  const auto opens = stable_topology(sp_);
  std::uint64_t families = 0;
  for (auto a : opens) {
    Index inside = 0;
    for (auto b : opens) inside += b.is_subset_of(a);
    families += inside >= 63 ? budget + 1 : (std::uint64_t{1} << inside);
  }
  if (families > budget) {
    total.undecided(std::to_string(families) + " covering families exceed the budget of " + std::to_string(budget));
    return total;
  }
  for (auto a : opens)
    for (const auto& cover : stable_coverings(sp_, a)) {
      const Check c = sheaf_check(a, cover);
      total.expect(c.passed(), [&] { return c.name + ": " + c.detail; });
    }
  return total;
}

Check CentralSheaf::direct_sum_center_check(SpectrumSubset a) const {
  const auto& alg = algebra();
  const auto& f = sections(a);
  Check check("center of End of the sum over " + format_vertices(alg.quiver(), a));
  std::vector<Representation> parts;
  for (Index x : f.points) parts.push_back(sp_.point(x).injective);
  const DirectSum e = direct_sum(parts, alg);
  const EndoCenter z = endo_center(e.object);
  Mat map(z.ring.dimension(), f.dimension(), alg.modulus());
  for (Index col = 0; col < f.dimension(); ++col) {
    const Vec fam = f.basis.row_vec(col);
    ModuleMap diag = ModuleMap::zero(e.object, e.object);
    for (Index i = 0; i < f.points.size(); ++i)
      diag = diag + compose(e.injections[i], compose(component(f, fam, f.points[i]), e.projections[i]));
    const auto coords = center_coordinates(z, diag);
    check.expect(coords.has_value(), [&] { return "the diagonal of family " + vector_text(fam) + " is not central"; });
    if (!coords) return check;
    for (Index r = 0; r < coords->size(); ++r) map(r, col) = (*coords)[r];
  }
  check.expect(is_ring_isomorphism(f.ring, z.ring, map), [&] {
    return "diagonal map is not a ring isomorphism: dim F(A) = " + std::to_string(f.dimension()) +
           ", dim Z(End E_A) = " + std::to_string(z.ring.dimension());
  });
  return check;
}

// ---------------------------------------------------------------- the center of the category

CategoryCenter category_center(const CentralSheaf& sheaf) {
  const auto& alg = sheaf.algebra();
  const auto& sp = sheaf.spectrum();
  CategoryCenter out;
  out.algebra_center = algebra_center(alg);
  out.sections = sheaf.sections(sp.everything());
  const auto& zc = out.algebra_center;
  const auto& f = out.sections;
  out.evaluation = Mat(f.dimension(), zc.elements.size(), alg.modulus());

  Check eval("evaluation Z(A) -> F(Sp) is a ring isomorphism");
  bool defined = true;
  for (Index j = 0; j < zc.elements.size() && defined; ++j) {
    Vec fam(f.basis.cols(), 0);
    for (Index i = 0; i < f.points.size() && defined; ++i) {
      const Index x = f.points[i];
      auto coords = center_coordinates(sheaf.point_center(x), element_endomorphism(sp.point(x).injective, zc.elements[j]));
      defined = coords.has_value();
      if (defined) put(fam, f.offsets[i], *coords);
    }
    std::optional<Vec> coords;
    if (defined) coords = f.dimension() ? rref_coordinates(f.basis, fam) : std::optional<Vec>(Vec{});
    defined = defined && coords.has_value();
    eval.expect(defined, [&] { return "central element " + vector_text(zc.elements[j]) + " gives no compatible family"; });
    if (defined)
      for (Index r = 0; r < coords->size(); ++r) out.evaluation(r, j) = (*coords)[r];
  }
  if (defined) {
    eval.expect(is_ring_isomorphism(zc.ring, f.ring, out.evaluation), [&] {
      return "not a ring isomorphism: dim Z(A) = " + std::to_string(zc.ring.dimension()) +
             ", dim F(Sp) = " + std::to_string(f.dimension());
    });
  }
  out.checks.push_back(std::move(eval));

  std::vector<Representation> parts;
  for (const auto& pt : sp.points()) parts.push_back(pt.injective);
  const auto cogenerator = direct_sum(parts, alg).object;
  out.checks.push_back(evaluation_check("evaluation onto Z(End E) for E the sum of the spectrum", zc, cogenerator));
  if (sp.size() > 0) {
    parts.push_back(sp.point(0).injective);
    out.checks.push_back(evaluation_check(
        "evaluation onto Z(End E) for E the sum of the spectrum plus I(" + alg.quiver().vertex_name(0) + ")", zc,
        direct_sum(parts, alg).object));
  }
  return out;
}

// ---------------------------------------------------------------- quotient center oracle

QuotientCenter quotient_center_oracle(const LocalizingSubcategory& l, Index budget) {
  const auto& alg = l.algebra();
  const auto& q = alg.quiver();
  const Residue p = alg.modulus();
  if (!is_stable(l)) throw HypothesisViolation("quotient_center_oracle: " + format_vertices(q, l.vertices()) + " is not stable");
  for (Index x = 0; x < alg.vertex_count(); ++x) {
    if (l.vertices().contains(x)) continue;
    const auto ix = indecomposable_injective(alg, x);
    for (Index d : ix.dims())
      if (d > budget) {
        throw InvalidArgument("quotient_center_oracle: budget " + std::to_string(budget) + " does not reach I(" +
                              q.vertex_name(x) + ")");
      }
  }
  QuotientCenter out;
  out.subcategory = l;
  std::vector<Representation> closed;
  for (auto& m : enumerate_representations(alg, budget))
    if (is_closed(l, m)) closed.push_back(std::move(m));
  out.objects = iso_class_representatives(closed);

  Index unknowns = 0;
  for (const auto& x : out.objects) {
    out.offsets.push_back(unknowns);
    out.end_coordinates.push_back(hom_basis_matrix(x, x));
    out.end_bases.push_back(hom_space(x, x));
    unknowns += out.end_bases.back().size();
  }
  // eta_l f = f eta_k for every f in Hom(X_k, X_l), endomorphisms included
  Mat sys(0, unknowns, p);
  for (Index k = 0; k < out.objects.size(); ++k)
    for (Index l2 = 0; l2 < out.objects.size(); ++l2) {
      const auto homs = hom_space(out.objects[k], out.objects[l2]);
      if (homs.empty()) continue;
      const Index len = homs.front().coordinates().size();
      Mat block(homs.size() * len, unknowns, p);
      for (Index h = 0; h < homs.size(); ++h) {
        for (Index e = 0; e < out.end_bases[l2].size(); ++e)
          add_column(block, h * len, out.offsets[l2] + e, compose(out.end_bases[l2][e], homs[h]).coordinates(), false);
        for (Index e = 0; e < out.end_bases[k].size(); ++e)
          add_column(block, h * len, out.offsets[k] + e, compose(homs[h], out.end_bases[k][e]).coordinates(), true);
      }
      sys = vstack(sys, block);
      // keep the system at most a few times as tall as it is wide
      if (sys.rows() > 2 * unknowns) sys = row_space(sys);
    }
  out.basis = solution_space(sys, unknowns, p);
  Vec unit(unknowns, 0);
  for (Index k = 0; k < out.objects.size(); ++k) {
    if (out.end_bases[k].empty()) continue;
    put(unit, out.offsets[k], *rref_coordinates(out.end_coordinates[k], ModuleMap::identity(out.objects[k]).coordinates()));
  }
  out.ring = subalgebra_presentation(
      out.basis,
      [&](const Vec& u, const Vec& w) {
        Vec prod(unknowns, 0);
        for (Index k = 0; k < out.objects.size(); ++k) {
          const Index d = out.end_bases[k].size();
          if (d == 0) continue;
          const auto& x = out.objects[k];
          const auto a = combine(out.end_bases[k], slice(u, out.offsets[k], d), x, x);
          const auto b = combine(out.end_bases[k], slice(w, out.offsets[k], d), x, x);
          put(prod, out.offsets[k], *rref_coordinates(out.end_coordinates[k], compose(a, b).coordinates()));
        }
        return prod;
      },
      unit);
  return out;
}

Mat family_action(const CentralSheaf& sheaf, const QuotientCenter& oracle) {
  const auto& sp = sheaf.spectrum();
  const auto& alg = sheaf.algebra();
  const auto& f = sheaf.sections(A_of(sp, oracle.subcategory));
  const Index len = oracle.basis.cols();
  Mat out(oracle.ring.dimension(), f.dimension(), alg.modulus());
  // the hulls do not depend on the family
  std::vector<InjectiveHull> hulls;
  std::vector<DirectSum> sums;
  for (const auto& x : oracle.objects) {
    hulls.push_back(injective_hull(x));
    std::vector<Representation> parts;
    for (Index v : hulls.back().summand_vertices) {
      if (!f.subset.contains(v)) throw TheoremViolation("family_action: a closed object has torsion in its socle");
      parts.push_back(sp.point(v).injective);
    }
    sums.push_back(direct_sum(parts, alg));
    if (!(sums.back().object == hulls.back().object)) throw TheoremViolation("family_action: unexpected hull layout");
  }
  for (Index col = 0; col < f.dimension(); ++col) {
    const Vec fam = f.basis.row_vec(col);
    Vec eta(len, 0);
    for (Index k = 0; k < oracle.objects.size(); ++k) {
      if (oracle.end_bases[k].empty()) continue;
      const auto& hull = hulls[k];
      const auto& sum = sums[k];
      ModuleMap zeta = ModuleMap::zero(hull.object, hull.object);
      for (Index i = 0; i < hull.summand_vertices.size(); ++i)
        zeta = zeta + compose(sum.injections[i], compose(sheaf.component(f, fam, hull.summand_vertices[i]), sum.projections[i]));
      const ModuleMap restricted = factor_through(compose(zeta, hull.embedding), Subobject{oracle.objects[k], hull.embedding});
      put(eta, oracle.offsets[k], *rref_coordinates(oracle.end_coordinates[k], restricted.coordinates()));
    }
    if (oracle.ring.dimension() == 0) {
      if (std::any_of(eta.begin(), eta.end(), [](Residue r) { return r != 0; }))
        throw TheoremViolation("family_action: a family acts unnaturally");
      continue;
    }
    auto coords = rref_coordinates(oracle.basis, eta);
    if (!coords) throw TheoremViolation("family_action: family " + vector_text(fam) + " acts unnaturally");
    for (Index r = 0; r < coords->size(); ++r) out(r, col) = (*coords)[r];
  }
  return out;
}

Mat oracle_restriction(const QuotientCenter& large, const QuotientCenter& small) {
  if (!large.subcategory.vertices().is_subset_of(small.subcategory.vertices()) ||
      !(large.subcategory.algebra() == small.subcategory.algebra())) {
    throw InvalidArgument("oracle_restriction: subcategories are not nested");
  }
  const Residue p = large.subcategory.algebra().modulus();
  // for each small object, a large object and an isomorphism phi: large -> small
  std::vector<std::pair<Index, ModuleMap>> match;
  for (const auto& y : small.objects) {
    bool found = false;
    for (Index k = 0; k < large.objects.size() && !found; ++k) {
      if (large.objects[k].dims() != y.dims()) continue;
      if (auto iso = is_isomorphic(large.objects[k], y)) {
        match.emplace_back(k, *iso);
        found = true;
      }
    }
    if (!found) throw TheoremViolation("oracle_restriction: a closed object for the larger subcategory is missing");
  }
  Mat out(small.ring.dimension(), large.ring.dimension(), p);
  for (Index col = 0; col < large.ring.dimension(); ++col) {
    const Vec fam = large.basis.row_vec(col);
    Vec eta(small.basis.cols(), 0);
    for (Index j = 0; j < small.objects.size(); ++j) {
      if (small.end_bases[j].empty()) continue;
      const auto& [k, phi] = match[j];
      const auto& x = large.objects[k];
      const ModuleMap ek = combine(large.end_bases[k], slice(fam, large.offsets[k], large.end_bases[k].size()), x, x);
      const ModuleMap moved = compose(phi, compose(ek, inverse(phi)));
      put(eta, small.offsets[j], *rref_coordinates(small.end_coordinates[j], moved.coordinates()));
    }
    if (small.ring.dimension() == 0) continue;
    auto coords = rref_coordinates(small.basis, eta);
    if (!coords) throw TheoremViolation("oracle_restriction: restriction is not natural");
    for (Index r = 0; r < coords->size(); ++r) out(r, col) = (*coords)[r];
  }
  return out;
}

Check oracle_check(const CentralSheaf& sheaf, const QuotientCenter& oracle) {
  const auto& q = sheaf.algebra().quiver();
  Check check("quotient center oracle for L = " + format_vertices(q, oracle.subcategory.vertices()));
  const auto& f = sheaf.sections(A_of(sheaf.spectrum(), oracle.subcategory));
  check.expect(f.dimension() == oracle.ring.dimension(), [&] {
    return "dim F(A(L)) = " + std::to_string(f.dimension()) + " but the oracle finds " +
           std::to_string(oracle.ring.dimension());
  });
  try {
    const Mat map = family_action(sheaf, oracle);
    check.expect(is_ring_isomorphism(f.ring, oracle.ring, map),
                 [] { return std::string("the action of F(A(L)) on closed objects is not a ring isomorphism"); });
  } catch (const TheoremViolation& e) {
    check.fail(e.what());
  }
  return check;
}

}  // namespace csheaf
