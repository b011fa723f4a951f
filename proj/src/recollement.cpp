#include "csheaf/recollement.hpp"

#include <functional>
#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

namespace {

// Coefficient vectors c with sum_i c_i image(basis_i) = target, as a particular
// solution plus the kernel.
struct LinearSolution {
  std::optional<Vec> particular;
  Mat kernel;
};

LinearSolution solve_over(const std::vector<ModuleMap>& basis, const std::function<Vec(const ModuleMap&)>& image,
                          const Vec& target, Residue p) {
  Mat sys(target.size(), basis.size(), p);
  for (Index i = 0; i < basis.size(); ++i) {
    const Vec col = image(basis[i]);
    for (Index r = 0; r < col.size(); ++r) sys(r, i) = col[r];
  }
  LinearSolution out;
  if (basis.empty()) {
    out.kernel = Mat(0, 0, p);
    if (std::all_of(target.begin(), target.end(), [](Residue x) { return x == 0; })) out.particular = Vec{};
    return out;
  }
  if (target.empty()) {
    out.particular = Vec(basis.size(), 0);
    out.kernel = Mat::identity(basis.size(), p);
    return out;
  }
  out.particular = solve(sys, target);
  out.kernel = kernel_basis(sys);
  return out;
}

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

LocalizedObject identity_closure(const Representation& x) { return {x, ModuleMap::identity(x)}; }

// Exactness of a then b in C/L: b a = 0, and the kernel of a, the homology
// and the cokernel of b lie in L.
bool exact_modulo(const LocalizingSubcategory& l, const ModuleMap& a, const ModuleMap& b) {
  if (!compose(b, a).is_zero()) return false;
  if (!is_member(l, kernel(a).object) || !is_member(l, cokernel(b).object)) return false;
  const auto kb = kernel(b).object.dims();
  const auto ia = image(a).object.dims();
  for (Index v = 0; v < kb.size(); ++v)
    if (kb[v] != ia[v] && !l.vertices().contains(v)) return false;
  return true;
}

std::string name_of(const Recollement& r) {
  const auto& q = r.algebra().quiver();
  return "L0 = " + format_vertices(q, r.l0().vertices()) + ", L1 = " + format_vertices(q, r.l1().vertices());
}

}  // namespace

Recollement::Recollement(LocalizingSubcategory l0, LocalizingSubcategory l1)
    : l0_(std::move(l0)), l1_(std::move(l1)), join_(csheaf::join(l0_, l1_)), meet_(csheaf::meet(l0_, l1_)) {
  const auto& q = algebra().quiver();
  for (const auto* l : {&l0_, &l1_})
    if (!is_stable(*l)) throw HypothesisViolation("recollement: " + format_vertices(q, l->vertices()) + " is not stable");
}

RecollementObject make_recollement_object(const Recollement& r, const Representation& x0, const Representation& x1,
                                          const ModuleMap& sigma) {
  if (!is_closed(r.l0(), x0)) throw InvalidArgument("recollement object: X0 is not closed for L0");
  if (!is_closed(r.l1(), x1)) throw InvalidArgument("recollement object: X1 is not closed for L1");
  RecollementObject out{x0, x1, localize(r.join(), x0), localize(r.join(), x1), sigma};
  if (!(sigma.source() == out.c0.closure) || !(sigma.target() == out.c1.closure)) {
    throw InvalidArgument("recollement object: sigma does not run between the closures");
  }
  if (!sigma.is_isomorphism()) throw InvalidArgument("recollement object: sigma is not invertible");
  return out;
}

RecollementImage functor_R(const Recollement& r, const Representation& x) {
  RecollementImage out;
  out.q0 = localize(r.l0(), x);
  out.q1 = localize(r.l1(), x);
  auto& t = out.object;
  t.x0 = out.q0.closure;
  t.x1 = out.q1.closure;
  t.c0 = localize(r.join(), t.x0);
  t.c1 = localize(r.join(), t.x1);
  const LocalizedObject h0{t.c0.closure, compose(t.c0.unit, out.q0.unit)};
  const LocalizedObject h1{t.c1.closure, compose(t.c1.unit, out.q1.unit)};
  t.sigma = localize_map(ModuleMap::identity(x), h0, h1);
  if (!t.sigma.is_isomorphism()) throw TheoremViolation("functor_R: the two closures of " + describe(x) + " differ");
  return out;
}

RecollementMorphism functor_R(const ModuleMap& f, const RecollementImage& rx, const RecollementImage& ry) {
  return {localize_map(f, rx.q0, ry.q0), localize_map(f, rx.q1, ry.q1)};
}

ModuleMap join_closure_0(const RecollementObject& a, const RecollementObject& b, const ModuleMap& g0) {
  return localize_map(g0, a.c0, b.c0);
}

ModuleMap join_closure_1(const RecollementObject& a, const RecollementObject& b, const ModuleMap& g1) {
  return localize_map(g1, a.c1, b.c1);
}

bool is_recollement_morphism(const RecollementObject& a, const RecollementObject& b, const RecollementMorphism& g) {
  return compose(b.sigma, join_closure_0(a, b, g.g0)) == compose(join_closure_1(a, b, g.g1), a.sigma);
}

std::vector<RecollementMorphism> recollement_hom(const RecollementObject& a, const RecollementObject& b) {
  const Residue p = a.x0.modulus();
  const auto h0 = hom_space(a.x0, b.x0);
  const auto h1 = hom_space(a.x1, b.x1);
  std::vector<ModuleMap> left, right;
  for (const auto& g : h0) left.push_back(compose(b.sigma, join_closure_0(a, b, g)));
  for (const auto& g : h1) right.push_back(compose(join_closure_1(a, b, g), a.sigma));
  const Index n0 = h0.size(), n1 = h1.size();
  if (n0 + n1 == 0) return {};
  const Index len = ModuleMap::zero(a.c0.closure, b.c1.closure).coordinates().size();
  Mat sys(len, n0 + n1, p);
  for (Index i = 0; i < n0; ++i) {
    const Vec c = left[i].coordinates();
    for (Index r = 0; r < len; ++r) sys(r, i) = c[r];
  }
  for (Index j = 0; j < n1; ++j) {
    const Vec c = right[j].coordinates();
    for (Index r = 0; r < len; ++r) sys(r, n0 + j) = modp::neg(c[r], p);
  }
  const Mat sols = len == 0 ? Mat::identity(n0 + n1, p) : kernel_basis(sys);
  std::vector<RecollementMorphism> out;
  for (Index k = 0; k < sols.rows(); ++k) {
    const Vec s = sols.row_vec(k);
    out.push_back({combine(h0, Vec(s.begin(), s.begin() + n0), a.x0, b.x0),
                   combine(h1, Vec(s.begin() + n0, s.end()), a.x1, b.x1)});
  }
  return out;
}

GluedObject functor_V(const Recollement& r, const RecollementObject& theta) {
  if (!theta.sigma.is_isomorphism()) throw InvalidArgument("functor_V: sigma is not invertible");
  const Residue p = r.algebra().modulus();
  const ModuleMap left = compose(theta.sigma, theta.c0.unit);
  const ModuleMap right = theta.c1.unit;
  const DirectSum sum = direct_sum({theta.x0, theta.x1}, r.algebra());
  const ModuleMap difference = map_out_of_sum(sum, {left, scale(right, p - 1)});
  const Subobject fiber = kernel(difference);
  const ModuleMap p0 = compose(sum.projections[0], fiber.inclusion);
  const ModuleMap p1 = compose(sum.projections[1], fiber.inclusion);
  const LocalizedObject closed = localize(r.meet(), fiber.object);
  GluedObject out;
  out.object = closed.closure;
  out.fiber_product = fiber.object;
  out.pi0 = localize_map(p0, closed, identity_closure(theta.x0));
  out.pi1 = localize_map(p1, closed, identity_closure(theta.x1));
  return out;
}

std::vector<Check> verify_equivalence(const Recollement& r, const EquivalenceOptions& options) {
  const auto& alg = r.algebra();
  const Residue p = alg.modulus();
  const std::string suffix = " (" + name_of(r) + ")";
  Check unit("unit X -> VR(X) is an isomorphism after closure" + suffix);
  Check counit("counit RV(theta) -> theta is an isomorphism" + suffix);
  Check projections("Q0(pi0) and Q1(pi1) are isomorphisms" + suffix);
  Check faithful("R is faithful" + suffix);
  Check full("R is full" + suffix);
  Check exact("R is exact" + suffix);
  auto all = [&] { return std::vector<Check>{unit, counit, projections, faithful, full, exact}; };

  std::vector<Representation> objects;
  try {
    objects = iso_class_representatives(enumerate_representations(alg, options.budget));
  } catch (const InvalidArgument& e) {
    for (auto* c : {&unit, &counit, &projections, &faithful, &full, &exact}) c->undecided(e.what());
    return all();
  }
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    const auto iv = indecomposable_injective(alg, v);
    bool seen = false;
    for (const auto& x : objects) seen = seen || (x.dims() == iv.dims() && is_isomorphic(x, iv).has_value());
    if (!seen) objects.push_back(iv);
  }

  // unit
  std::vector<RecollementImage> images;
  for (const auto& x : objects) {
    images.push_back(functor_R(r, x));
    const auto& rx = images.back();
    const GluedObject v = functor_V(r, rx.object);
    const LocalizedObject cx = localize(r.meet(), x);
    const auto homs = hom_space(cx.closure, v.object);
    const auto sol = solve_over(
        homs,
        [&](const ModuleMap& n) {
          return concat(compose(v.pi0, compose(n, cx.unit)).coordinates(),
                        compose(v.pi1, compose(n, cx.unit)).coordinates());
        },
        concat(rx.q0.unit.coordinates(), rx.q1.unit.coordinates()), p);
    const bool unique = sol.particular && sol.kernel.rows() == 0;
    bool iso = false;
    if (unique) iso = combine(homs, *sol.particular, cx.closure, v.object).is_isomorphism();
    unit.expect(unique && iso, [&] {
      return "X = " + describe(x) + ": " + (!sol.particular ? "no comparison map" : !unique ? "comparison map not unique" : "comparison map is not invertible");
    });
  }

  // counit and projections, over glued objects built from closed pieces
  std::vector<Representation> closed0, closed1;
  for (const auto& x : objects) {
    if (is_closed(r.l0(), x)) closed0.push_back(x);
    if (is_closed(r.l1(), x)) closed1.push_back(x);
  }
  std::uint64_t glued = 0;
  bool exhausted = false;
  for (const auto& x0 : closed0) {
    const auto c0 = localize(r.join(), x0);
    for (const auto& x1 : closed1) {
      if (exhausted) break;
      const auto c1 = localize(r.join(), x1);
      if (c0.closure.dims() != c1.closure.dims()) continue;
      const auto homs = hom_space(c0.closure, c1.closure);
      std::uint64_t combos = 1;
      for (Index i = 0; i < homs.size() && combos <= options.iso_search_limit; ++i) combos *= p;
      if (combos > options.iso_search_limit) {
        exhausted = true;
        counit.undecided("Hom between the closures of " + describe(x0) + " and " + describe(x1) + " exceeds the search limit");
        projections.undecided(counit.detail);
        break;
      }
      Vec c(homs.size(), 0);
      for (std::uint64_t k = 0; k < combos; ++k) {
        const ModuleMap sigma = combine(homs, c, c0.closure, c1.closure);
        for (Index i = 0; i < c.size(); ++i)
          if ((c[i] = (c[i] + 1) % p) != 0) break;
        if (!sigma.is_isomorphism()) continue;
        if (++glued > options.object_limit) {
          exhausted = true;
          counit.undecided("more than " + std::to_string(options.object_limit) + " glued objects");
          projections.undecided(counit.detail);
          break;
        }
        const RecollementObject theta{x0, x1, c0, c1, sigma};
        const GluedObject v = functor_V(r, theta);
        const RecollementImage rv = functor_R(r, v.object);
        const ModuleMap g0 = localize_map(v.pi0, rv.q0, identity_closure(x0));
        const ModuleMap g1 = localize_map(v.pi1, rv.q1, identity_closure(x1));
        const bool isos = g0.is_isomorphism() && g1.is_isomorphism();
        auto describe_theta = [&] { return "theta = (" + describe(x0) + ", " + describe(x1) + ", sigma " + describe(sigma.source()) + ")"; };
        projections.expect(isos, [&] { return describe_theta() + ": a projection does not become invertible"; });
        counit.expect(isos && is_recollement_morphism(rv.object, theta, {g0, g1}),
                      [&] { return describe_theta() + ": the counit is not an isomorphism of glued objects"; });
      }
    }
    if (exhausted) break;
  }

  // faithful and full between closed objects for the meet
  std::vector<Index> closed_meet;
  for (Index i = 0; i < objects.size(); ++i)
    if (is_closed(r.meet(), objects[i])) closed_meet.push_back(i);
  for (Index i : closed_meet)
    for (Index j : closed_meet) {
      const auto& x = objects[i];
      const auto& y = objects[j];
      const auto homs = hom_space(x, y);
      const auto d_homs = recollement_hom(images[i].object, images[j].object);
      Mat rows(0, 0, p);
      bool morphisms = true;
      for (const auto& f : homs) {
        const auto g = functor_R(f, images[i], images[j]);
        morphisms = morphisms && is_recollement_morphism(images[i].object, images[j].object, g);
        const Vec c = concat(g.g0.coordinates(), g.g1.coordinates());
        rows = rows.rows() == 0 ? Mat::from_rows(c.size(), p, {c}) : vstack(rows, Mat::from_rows(c.size(), p, {c}));
      }
      const Index rk = rows.rows() && rows.cols() ? rank(rows) : 0;
      auto where = [&] { return "X = " + describe(x) + ", Y = " + describe(y); };
      faithful.expect(morphisms && rk == homs.size(), [&] {
        return where() + ": R maps a " + std::to_string(homs.size()) + "-dimensional Hom onto rank " + std::to_string(rk);
      });
      full.expect(rk == d_homs.size(), [&] {
        return where() + ": image has dimension " + std::to_string(rk) + " inside a " + std::to_string(d_homs.size()) +
               "-dimensional Hom of glued objects";
      });
    }

  // exactness on kernel/image/cokernel sequences of maps between basic modules
  std::vector<Representation> basic;
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    basic.push_back(simple(alg, v));
    basic.push_back(indecomposable_projective(alg, v));
    basic.push_back(indecomposable_injective(alg, v));
  }
  for (const auto& x : basic)
    for (const auto& y : basic)
      for (const auto& f : hom_space(x, y)) {
        const Subobject k = kernel(f);
        const Subobject im = image(f);
        const QuotientObject cok = cokernel(f);
        const ModuleMap onto = factor_through(f, im);
        // 0 -> ker f -> X -> im f -> 0 and 0 -> im f -> Y -> coker f -> 0
        const std::vector<std::pair<ModuleMap, ModuleMap>> sequences{{k.inclusion, onto}, {im.inclusion, cok.projection}};
        for (const auto& [a, b] : sequences) {
          const RecollementImage ia = functor_R(r, a.source());
          const RecollementImage ib = functor_R(r, a.target());
          const RecollementImage ic = functor_R(r, b.target());
          const auto ga = functor_R(a, ia, ib);
          const auto gb = functor_R(b, ib, ic);
          exact.expect(exact_modulo(r.l0(), ga.g0, gb.g0) && exact_modulo(r.l1(), ga.g1, gb.g1), [&] {
            return "the image of a short exact sequence through " + describe(a.target()) + " is not exact";
          });
        }
      }
  return all();
}

Check center_exact_sequence(const CentralSheaf& sheaf, const LocalizingSubcategory& l1, const LocalizingSubcategory& l2) {
  const auto& q = sheaf.algebra().quiver();
  const auto& sp = sheaf.spectrum();
  for (const auto* l : {&l1, &l2})
    if (!is_stable(*l)) throw HypothesisViolation("center_exact_sequence: " + format_vertices(q, l->vertices()) + " is not stable");
  Check check("center exact sequence for L1 = " + format_vertices(q, l1.vertices()) +
              ", L2 = " + format_vertices(q, l2.vertices()));
  const auto a1 = A_of(sp, l1), a2 = A_of(sp, l2);
  const auto am = A_of(sp, meet(l1, l2)), aj = A_of(sp, join(l1, l2));
  check.expect(am == (a1 | a2), [&] { return std::string("A(L1 ^ L2) differs from A(L1) u A(L2)"); });
  check.expect(aj == (a1 & a2), [&] { return std::string("A(L1 v L2) differs from A(L1) n A(L2)"); });
  const Check inner = sheaf.sheaf_check(am, {a1, a2});
  check.expect(inner.passed(), [&] { return inner.detail; });
  return check;
}

}  // namespace csheaf
