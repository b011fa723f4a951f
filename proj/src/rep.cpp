#include "csheaf/rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "csheaf/error.hpp"

namespace csheaf {

// ---------------------------------------------------------------- Representation

struct Representation::Data {
  BoundAlgebra alg;
  std::vector<Index> dims;
  std::vector<Mat> action;
  std::vector<Index> offsets;
  Index total = 0;
};

namespace {

std::shared_ptr<const Representation::Data> make_data(BoundAlgebra alg, std::vector<Index> dims,
                                                      std::vector<Mat> action) {
  auto d = std::make_shared<Representation::Data>();
  d->alg = std::move(alg);
  d->dims = std::move(dims);
  d->action = std::move(action);
  d->offsets.resize(d->dims.size());
  for (Index v = 0; v < d->dims.size(); ++v) {
    d->offsets[v] = d->total;
    d->total += d->dims[v];
  }
  return d;
}

}  // namespace

Representation::Representation(BoundAlgebra alg, std::vector<Index> dims, std::vector<Mat> action) {
  if (!alg.valid()) throw InvalidArgument("representation of an empty algebra");
  const auto& q = alg.quiver();
  if (dims.size() != q.vertex_count()) throw DimensionMismatch("representation: one dimension per vertex expected");
  if (action.size() != q.arrows().size()) throw DimensionMismatch("representation: one matrix per arrow expected");
  for (Index a = 0; a < action.size(); ++a) {
    const auto& ar = q.arrow(a);
    if (action[a].modulus() != alg.modulus()) throw ModulusMismatch("representation: matrix over the wrong field");
    if (action[a].rows() != dims[ar.target] || action[a].cols() != dims[ar.source]) {
      throw DimensionMismatch("representation: arrow '" + ar.name + "' has the wrong shape");
    }
  }
  data_ = make_data(std::move(alg), std::move(dims), std::move(action));
  for (Index r = 0; r < algebra().relations().size(); ++r) {
    const auto& rel = algebra().relations()[r];
    if (rel.terms.empty()) continue;
    const auto& first = rel.terms.front().path;
    Mat sum(dim(first.target), dim(first.source), modulus());
    for (const auto& t : rel.terms) sum = sum + path_action(*this, t.path).scaled(modp::reduce(t.coefficient, modulus()));
    if (!sum.is_zero()) throw InvalidArgument("representation: relation " + std::to_string(r + 1) + " does not act as zero");
  }
}

Representation Representation::unchecked(BoundAlgebra alg, std::vector<Index> dims, std::vector<Mat> action) {
  Representation r;
  r.data_ = make_data(std::move(alg), std::move(dims), std::move(action));
  return r;
}

Representation Representation::zero(const BoundAlgebra& alg) {
  std::vector<Mat> action;
  for (Index a = 0; a < alg.quiver().arrows().size(); ++a) action.emplace_back(0, 0, alg.modulus());
  return unchecked(alg, std::vector<Index>(alg.vertex_count(), 0), std::move(action));
}

const BoundAlgebra& Representation::algebra() const {
  if (!data_) throw InvalidArgument("use of an empty Representation");
  return data_->alg;
}
const std::vector<Index>& Representation::dims() const {
  if (!data_) throw InvalidArgument("use of an empty Representation");
  return data_->dims;
}
Index Representation::total_dimension() const { return data_ ? data_->total : 0; }
Index Representation::offset(Index v) const { return data_->offsets.at(v); }
const Mat& Representation::action(Index arrow) const { return data_->action.at(arrow); }
const std::vector<Mat>& Representation::actions() const { return data_->action; }

VertexSet Representation::support() const {
  VertexSet s;
  for (Index v = 0; v < dims().size(); ++v)
    if (dims()[v] > 0) s.insert(v);
  return s;
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.algebra() == b.algebra() && a.dims() == b.dims() && a.actions() == b.actions();
}

void require_same_algebra(const Representation& a, const Representation& b, const char* where) {
  if (!(a.algebra() == b.algebra())) throw InvalidArgument(std::string(where) + ": representations of different algebras");
}

Mat path_action(const Representation& m, const Path& p) {
  Mat out = Mat::identity(m.dim(p.source), m.modulus());
  for (Index a : p.arrows) out = m.action(a) * out;
  return out;
}

// ---------------------------------------------------------------- ModuleMap

namespace {

void check_blocks(const Representation& s, const Representation& t, const std::vector<Mat>& blocks) {
  require_same_algebra(s, t, "module map");
  if (blocks.size() != s.dims().size()) throw DimensionMismatch("module map: one block per vertex expected");
  for (Index v = 0; v < blocks.size(); ++v) {
    if (blocks[v].rows() != t.dim(v) || blocks[v].cols() != s.dim(v)) {
      throw DimensionMismatch("module map: block " + std::to_string(v) + " has the wrong shape");
    }
    if (blocks[v].modulus() != s.modulus()) throw ModulusMismatch("module map: block over the wrong field");
  }
}

}  // namespace

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Mat> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  check_blocks(source_, target_, blocks_);
  const auto& q = source_.algebra().quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    if (!(target_.action(a) * blocks_[ar.source] == blocks_[ar.target] * source_.action(a))) {
      throw InvalidArgument("module map does not commute with arrow '" + ar.name + "'");
    }
  }
}

ModuleMap ModuleMap::unchecked(Representation source, Representation target, std::vector<Mat> blocks) {
  ModuleMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.blocks_ = std::move(blocks);
  return f;
}

ModuleMap ModuleMap::zero(Representation source, Representation target) {
  require_same_algebra(source, target, "zero map");
  std::vector<Mat> blocks;
  for (Index v = 0; v < source.dims().size(); ++v) blocks.emplace_back(target.dim(v), source.dim(v), source.modulus());
  return unchecked(std::move(source), std::move(target), std::move(blocks));
}

ModuleMap ModuleMap::identity(Representation m) {
  std::vector<Mat> blocks;
  for (Index v = 0; v < m.dims().size(); ++v) blocks.push_back(Mat::identity(m.dim(v), m.modulus()));
  return unchecked(m, m, std::move(blocks));
}

ModuleMap ModuleMap::from_coordinates(Representation source, Representation target, const Vec& coords) {
  std::vector<Mat> blocks;
  Index pos = 0;
  for (Index v = 0; v < source.dims().size(); ++v) {
    Mat b(target.dim(v), source.dim(v), source.modulus());
    for (Index r = 0; r < b.rows(); ++r)
      for (Index c = 0; c < b.cols(); ++c) {
        if (pos >= coords.size()) throw DimensionMismatch("from_coordinates: too few coordinates");
        b(r, c) = coords[pos++];
      }
    blocks.push_back(std::move(b));
  }
  if (pos != coords.size()) throw DimensionMismatch("from_coordinates: too many coordinates");
  return unchecked(std::move(source), std::move(target), std::move(blocks));
}

Vec ModuleMap::coordinates() const {
  Vec out;
  for (const auto& b : blocks_) out.insert(out.end(), b.entries().begin(), b.entries().end());
  return out;
}

Mat ModuleMap::total_matrix() const {
  Mat out(target_.total_dimension(), source_.total_dimension(), source_.modulus());
  for (Index v = 0; v < blocks_.size(); ++v)
    for (Index r = 0; r < blocks_[v].rows(); ++r)
      for (Index c = 0; c < blocks_[v].cols(); ++c) out(target_.offset(v) + r, source_.offset(v) + c) = blocks_[v](r, c);
  return out;
}

Vec ModuleMap::apply(const Vec& total) const { return total_matrix().apply(total); }

bool ModuleMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Mat& b) { return b.is_zero(); });
}

Index ModuleMap::rank() const {
  Index r = 0;
  for (const auto& b : blocks_) r += csheaf::rank(b);
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source_.total_dimension(); }
bool ModuleMap::is_surjective() const { return rank() == target_.total_dimension(); }
bool ModuleMap::is_isomorphism() const { return is_injective() && is_surjective(); }

bool operator==(const ModuleMap& a, const ModuleMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: maps do not meet");
  std::vector<Mat> blocks;
  for (Index v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
  return ModuleMap::unchecked(f.source(), g.target(), std::move(blocks));
}

namespace {

void require_parallel(const ModuleMap& a, const ModuleMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw InvalidArgument("maps are not parallel");
}

}  // namespace

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
  require_parallel(a, b);
  std::vector<Mat> blocks;
  for (Index v = 0; v < a.blocks().size(); ++v) blocks.push_back(a.block(v) + b.block(v));
  return ModuleMap::unchecked(a.source(), a.target(), std::move(blocks));
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
  require_parallel(a, b);
  std::vector<Mat> blocks;
  for (Index v = 0; v < a.blocks().size(); ++v) blocks.push_back(a.block(v) - b.block(v));
  return ModuleMap::unchecked(a.source(), a.target(), std::move(blocks));
}

ModuleMap scale(const ModuleMap& f, Residue c) {
  std::vector<Mat> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.scaled(c));
  return ModuleMap::unchecked(f.source(), f.target(), std::move(blocks));
}

ModuleMap combine(const std::vector<ModuleMap>& maps, const Vec& coeffs, const Representation& source,
                  const Representation& target) {
  if (maps.size() != coeffs.size()) throw DimensionMismatch("combine: one coefficient per map expected");
  ModuleMap out = ModuleMap::zero(source, target);
  std::vector<Mat> blocks = out.blocks();
  const Residue p = source.modulus();
  for (Index i = 0; i < maps.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (Index v = 0; v < blocks.size(); ++v) {
      const Mat& src = maps[i].block(v);
      Mat& dst = blocks[v];
      for (Index r = 0; r < dst.rows(); ++r)
        for (Index c = 0; c < dst.cols(); ++c)
          if (src(r, c) != 0) dst(r, c) = modp::add(dst(r, c), modp::mul(coeffs[i], src(r, c), p), p);
    }
  }
  return ModuleMap::unchecked(source, target, std::move(blocks));
}

ModuleMap inverse(const ModuleMap& f) {
  std::vector<Mat> blocks;
  for (Index v = 0; v < f.blocks().size(); ++v) {
    auto inv = csheaf::inverse(f.block(v));
    if (!inv || f.block(v).rows() != f.block(v).cols()) throw InvalidArgument("inverse: map is not an isomorphism");
    blocks.push_back(std::move(*inv));
  }
  return ModuleMap::unchecked(f.target(), f.source(), std::move(blocks));
}

// ---------------------------------------------------------------- building blocks

namespace {

void require_vertex(const BoundAlgebra& alg, Index v) {
  if (v >= alg.vertex_count()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Representation simple(const BoundAlgebra& alg, Index v) {
  require_vertex(alg, v);
  std::vector<Index> dims(alg.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> action;
  for (const auto& ar : alg.quiver().arrows()) action.emplace_back(dims[ar.target], dims[ar.source], alg.modulus());
  return Representation::unchecked(alg, std::move(dims), std::move(action));
}

Representation indecomposable_projective(const BoundAlgebra& alg, Index v) {
  require_vertex(alg, v);
  const Index n = alg.vertex_count();
  std::vector<Index> dims(n);
  for (Index w = 0; w < n; ++w) dims[w] = alg.basis_between(v, w).size();
  std::vector<Mat> action;
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    const auto& from = alg.basis_between(v, ar.source);
    const auto& to = alg.basis_between(v, ar.target);
    Mat m(to.size(), from.size(), alg.modulus());
    for (Index j = 0; j < from.size(); ++j) {
      Path ext = alg.path_basis()[from[j]];
      ext.arrows.push_back(a);
      ext.target = ar.target;
      const Vec nf = alg.normal_form(ext);
      for (Index i = 0; i < to.size(); ++i) m(i, j) = nf[to[i]];
    }
    action.push_back(std::move(m));
  }
  return Representation::unchecked(alg, std::move(dims), std::move(action));
}

Representation indecomposable_injective(const BoundAlgebra& alg, Index v) {
  require_vertex(alg, v);
  const Index n = alg.vertex_count();
  std::vector<Index> dims(n);
  for (Index w = 0; w < n; ++w) dims[w] = alg.basis_between(w, v).size();
  std::vector<Mat> action;
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    const auto& from = alg.basis_between(ar.source, v);
    const auto& to = alg.basis_between(ar.target, v);
    // (a.f)(q') = f(q' after a)
    Mat m(to.size(), from.size(), alg.modulus());
    for (Index i = 0; i < to.size(); ++i) {
      const Path& qi = alg.path_basis()[to[i]];
      Path full{ar.source, qi.target, {a}};
      full.arrows.insert(full.arrows.end(), qi.arrows.begin(), qi.arrows.end());
      const Vec nf = alg.normal_form(full);
      for (Index j = 0; j < from.size(); ++j) m(i, j) = nf[from[j]];
    }
    action.push_back(std::move(m));
  }
  return Representation::unchecked(alg, std::move(dims), std::move(action));
}

Vec injective_socle_vector(const BoundAlgebra& alg, Index v) {
  require_vertex(alg, v);
  Index offset = 0;
  for (Index w = 0; w < v; ++w) offset += alg.basis_between(w, v).size();
  const auto& local = alg.basis_between(v, v);
  Index total = offset;
  for (Index w = v; w < alg.vertex_count(); ++w) total += alg.basis_between(w, v).size();
  Vec out(total, 0);
  const auto it = std::find(local.begin(), local.end(), alg.idempotent(v));
  out[offset + static_cast<Index>(it - local.begin())] = 1;
  return out;
}

Mat element_action(const Representation& m, const Vec& element) {
  const auto& alg = m.algebra();
  if (element.size() != alg.dimension()) throw DimensionMismatch("element_action: element length");
  const Residue p = m.modulus();
  Mat out(m.total_dimension(), m.total_dimension(), p);
  for (Index b = 0; b < element.size(); ++b) {
    if (element[b] == 0) continue;
    const Path& path = alg.path_basis()[b];
    const Mat act = path_action(m, path);
    for (Index r = 0; r < act.rows(); ++r)
      for (Index c = 0; c < act.cols(); ++c) {
        auto& slot = out(m.offset(path.target) + r, m.offset(path.source) + c);
        slot = modp::add(slot, modp::mul(element[b], act(r, c), p), p);
      }
  }
  return out;
}

ModuleMap element_endomorphism(const Representation& m, const Vec& element) {
  const auto& alg = m.algebra();
  if (element.size() != alg.dimension()) throw DimensionMismatch("element_endomorphism: element length");
  std::vector<Mat> blocks;
  for (Index v = 0; v < alg.vertex_count(); ++v) blocks.emplace_back(m.dim(v), m.dim(v), m.modulus());
  for (Index b = 0; b < element.size(); ++b) {
    if (element[b] == 0) continue;
    const Path& path = alg.path_basis()[b];
    if (path.source != path.target) throw InvalidArgument("element_endomorphism: element has a non-cycle term");
    blocks[path.source] = blocks[path.source] + path_action(m, path).scaled(element[b]);
  }
  return ModuleMap(m, m, std::move(blocks));
}

// ---------------------------------------------------------------- Hom

Mat hom_basis_matrix(const Representation& m, const Representation& n) {
  require_same_algebra(m, n, "hom_space");
  const auto& q = m.algebra().quiver();
  const Residue p = m.modulus();
  const Index verts = q.vertex_count();
  std::vector<Index> var(verts + 1, 0);
  for (Index v = 0; v < verts; ++v) var[v + 1] = var[v] + n.dim(v) * m.dim(v);
  const Index unknowns = var[verts];
  Index equations = 0;
  for (const auto& ar : q.arrows()) equations += n.dim(ar.target) * m.dim(ar.source);
  Mat sys(equations, unknowns, p);
  Index row = 0;
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    const Index v = ar.source, w = ar.target;
    const Mat& na = n.action(a);
    const Mat& ma = m.action(a);
    // (N_a phi_v - phi_w M_a)[r][c]
    for (Index r = 0; r < n.dim(w); ++r) {
      for (Index c = 0; c < m.dim(v); ++c, ++row) {
        for (Index k = 0; k < n.dim(v); ++k) {
          if (na(r, k) == 0) continue;
          auto& slot = sys(row, var[v] + k * m.dim(v) + c);
          slot = modp::add(slot, na(r, k), p);
        }
        for (Index k = 0; k < m.dim(w); ++k) {
          if (ma(k, c) == 0) continue;
          auto& slot = sys(row, var[w] + r * m.dim(w) + k);
          slot = modp::sub(slot, ma(k, c), p);
        }
      }
    }
  }
  if (unknowns == 0) return Mat(0, 0, p);
  return row_space(kernel_basis(sys));
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  const Mat basis = hom_basis_matrix(m, n);
  std::vector<ModuleMap> out;
  for (Index i = 0; i < basis.rows(); ++i) out.push_back(ModuleMap::from_coordinates(m, n, basis.row_vec(i)));
  return out;
}

Index hom_dim(const Representation& m, const Representation& n) { return hom_basis_matrix(m, n).rows(); }

// ---------------------------------------------------------------- subquotients

Subobject subrepresentation(const Representation& m, const std::vector<Mat>& subspaces) {
  const auto& alg = m.algebra();
  const Index verts = alg.vertex_count();
  if (subspaces.size() != verts) throw DimensionMismatch("subrepresentation: one subspace per vertex expected");
  std::vector<Mat> basis(verts);
  std::vector<Index> dims(verts);
  for (Index v = 0; v < verts; ++v) {
    if (subspaces[v].cols() != m.dim(v) && !(subspaces[v].rows() == 0)) {
      throw DimensionMismatch("subrepresentation: subspace at vertex " + std::to_string(v) + " has the wrong width");
    }
    basis[v] = subspaces[v].rows() == 0 ? Mat(0, m.dim(v), m.modulus()) : row_space(subspaces[v]);
    dims[v] = basis[v].rows();
  }
  std::vector<Mat> action;
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    Mat act(dims[ar.target], dims[ar.source], m.modulus());
    for (Index j = 0; j < dims[ar.source]; ++j) {
      const Vec img = m.action(a).apply(basis[ar.source].row(j));
      auto coords = rref_coordinates(basis[ar.target], img);
      if (!coords) throw InvalidArgument("subrepresentation: subspaces are not closed under arrow '" + ar.name + "'");
      for (Index i = 0; i < dims[ar.target]; ++i) act(i, j) = (*coords)[i];
    }
    action.push_back(std::move(act));
  }
  Representation sub = Representation::unchecked(alg, dims, std::move(action));
  std::vector<Mat> blocks;
  for (Index v = 0; v < verts; ++v) blocks.push_back(basis[v].transposed());
  return Subobject{sub, ModuleMap::unchecked(sub, m, std::move(blocks))};
}

std::vector<Mat> image_subspaces(const ModuleMap& f) {
  std::vector<Mat> out;
  for (Index v = 0; v < f.blocks().size(); ++v) {
    const Mat& b = f.block(v);
    out.push_back(b.cols() == 0 ? Mat(0, b.rows(), b.modulus()) : column_space(b));
  }
  return out;
}

Subobject kernel(const ModuleMap& f) {
  std::vector<Mat> spaces;
  for (Index v = 0; v < f.blocks().size(); ++v) {
    const Mat& b = f.block(v);
    spaces.push_back(b.rows() == 0 ? Mat::identity(b.cols(), b.modulus()) : kernel_basis(b));
  }
  return subrepresentation(f.source(), spaces);
}

Subobject image(const ModuleMap& f) { return subrepresentation(f.target(), image_subspaces(f)); }

QuotientObject quotient(const Representation& m, const std::vector<Mat>& subspaces) {
  const auto& alg = m.algebra();
  const Index verts = alg.vertex_count();
  const Residue p = m.modulus();
  if (subspaces.size() != verts) throw DimensionMismatch("quotient: one subspace per vertex expected");
  std::vector<Mat> proj(verts), section(verts);
  std::vector<Index> dims(verts);
  std::vector<Mat> canon(verts);
  for (Index v = 0; v < verts; ++v) {
    const Index d = m.dim(v);
    canon[v] = subspaces[v].rows() == 0 ? Mat(0, d, p) : rref(subspaces[v]).reduced;
    if (canon[v].cols() != d) throw DimensionMismatch("quotient: subspace has the wrong width");
    RrefResult rr = rref(canon[v]);
    canon[v] = rr.reduced.submatrix(0, 0, rr.rank, d);
    std::vector<bool> pivot(d, false);
    for (auto c : rr.pivot_columns) pivot[c] = true;
    std::vector<Index> free;
    for (Index c = 0; c < d; ++c)
      if (!pivot[c]) free.push_back(c);
    dims[v] = free.size();
    Mat pr(free.size(), d, p), sec(d, free.size(), p);
    for (Index i = 0; i < free.size(); ++i) {
      pr(i, free[i]) = 1;
      sec(free[i], i) = 1;
      for (Index r = 0; r < rr.rank; ++r) pr(i, rr.pivot_columns[r]) = modp::neg(canon[v](r, free[i]), p);
    }
    proj[v] = std::move(pr);
    section[v] = std::move(sec);
  }
  std::vector<Mat> action;
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    if (canon[ar.source].rows() > 0) {
      Mat moved = (m.action(a) * canon[ar.source].transposed()).transposed();
      if (!subspace_contains(canon[ar.target].rows() ? canon[ar.target] : Mat(0, m.dim(ar.target), p), moved)) {
        throw InvalidArgument("quotient: subspaces are not closed under arrow '" + ar.name + "'");
      }
    }
    action.push_back(proj[ar.target] * m.action(a) * section[ar.source]);
  }
  Representation quo = Representation::unchecked(alg, dims, std::move(action));
  return QuotientObject{quo, ModuleMap::unchecked(m, quo, std::move(proj))};
}

QuotientObject quotient(const Representation& m, const Subobject& sub) {
  if (!(sub.inclusion.target() == m)) throw InvalidArgument("quotient: subobject of a different representation");
  return quotient(m, image_subspaces(sub.inclusion));
}

QuotientObject cokernel(const ModuleMap& f) { return quotient(f.target(), image_subspaces(f)); }

ModuleMap factor_through(const ModuleMap& f, const Subobject& sub) {
  if (!(f.target() == sub.inclusion.target())) throw InvalidArgument("factor_through: target mismatch");
  std::vector<Mat> blocks;
  for (Index v = 0; v < f.blocks().size(); ++v) {
    const Mat& inc = sub.inclusion.block(v);
    if (f.block(v).cols() == 0 || inc.cols() == 0) {
      if (!f.block(v).is_zero()) throw InvalidArgument("factor_through: image leaves the subobject");
      blocks.emplace_back(inc.cols(), f.block(v).cols(), f.source().modulus());
      continue;
    }
    auto g = solve_matrix(inc, f.block(v));
    if (!g) throw InvalidArgument("factor_through: image leaves the subobject");
    blocks.push_back(std::move(*g));
  }
  return ModuleMap::unchecked(f.source(), sub.object, std::move(blocks));
}

ModuleMap factor_through(const ModuleMap& f, const QuotientObject& q) {
  if (!(f.source() == q.projection.source())) throw InvalidArgument("factor_through: source mismatch");
  std::vector<Mat> blocks;
  for (Index v = 0; v < f.blocks().size(); ++v) {
    const Mat& pr = q.projection.block(v);
    const Mat& fv = f.block(v);
    if (fv.rows() == 0 || pr.rows() == 0) {
      if (!fv.is_zero()) throw InvalidArgument("factor_through: map does not vanish on the kernel");
      blocks.emplace_back(fv.rows(), pr.rows(), f.source().modulus());
      continue;
    }
    auto gt = solve_matrix(pr.transposed(), fv.transposed());
    if (!gt) throw InvalidArgument("factor_through: map does not vanish on the kernel");
    blocks.push_back(gt->transposed());
  }
  return ModuleMap::unchecked(q.object, f.target(), std::move(blocks));
}

Subobject submodule_generated(const Representation& m, const std::vector<Vec>& vectors) {
  const auto& alg = m.algebra();
  const Index verts = alg.vertex_count();
  const Residue p = m.modulus();
  std::vector<Mat> spaces(verts);
  for (Index v = 0; v < verts; ++v) spaces[v] = Mat(0, m.dim(v), p);
  for (const auto& x : vectors) {
    if (x.size() != m.total_dimension()) throw DimensionMismatch("submodule_generated: vector length");
    for (Index v = 0; v < verts; ++v) {
      Vec part(x.begin() + m.offset(v), x.begin() + m.offset(v) + m.dim(v));
      spaces[v] = row_space(vstack(spaces[v], Mat::from_rows(m.dim(v), p, {part})));
    }
  }
  const auto& q = alg.quiver();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index a = 0; a < q.arrows().size(); ++a) {
      const auto& ar = q.arrow(a);
      if (spaces[ar.source].rows() == 0) continue;
      Mat moved = (m.action(a) * spaces[ar.source].transposed()).transposed();
      if (subspace_contains(spaces[ar.target], moved)) continue;
      spaces[ar.target] = subspace_sum(spaces[ar.target], moved);
      changed = true;
    }
  }
  return subrepresentation(m, spaces);
}

Subobject socle_in(const Representation& m, VertexSet s) {
  const auto& alg = m.algebra();
  const auto& q = alg.quiver();
  std::vector<Mat> spaces;
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    if (!s.contains(v)) {
      spaces.emplace_back(0, m.dim(v), m.modulus());
      continue;
    }
    Mat stacked(0, m.dim(v), m.modulus());
    for (Index a : q.arrows_from(v)) stacked = vstack(stacked, m.action(a));
    spaces.push_back(stacked.rows() == 0 ? Mat::identity(m.dim(v), m.modulus()) : kernel_basis(stacked));
  }
  return subrepresentation(m, spaces);
}

Subobject socle(const Representation& m) { return socle_in(m, VertexSet::full(m.dims().size())); }

std::vector<Index> socle_multiplicities(const Representation& m) { return socle(m).object.dims(); }

std::vector<Index> composition_multiplicities(const Representation& m) { return m.dims(); }

std::vector<Mat> radical_subspaces(const Representation& m) {
  const auto& alg = m.algebra();
  std::vector<Mat> spaces;
  for (Index v = 0; v < alg.vertex_count(); ++v) spaces.emplace_back(0, m.dim(v), m.modulus());
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    if (m.dim(ar.source) == 0 || m.dim(ar.target) == 0) continue;
    spaces[ar.target] = subspace_sum(spaces[ar.target], column_space(m.action(a)));
  }
  return spaces;
}

// ---------------------------------------------------------------- direct sums

DirectSum direct_sum(const std::vector<Representation>& summands, const BoundAlgebra& alg) {
  const Index verts = alg.vertex_count();
  const Residue p = alg.modulus();
  for (const auto& s : summands)
    if (!(s.algebra() == alg)) throw InvalidArgument("direct_sum: summands over different algebras");
  std::vector<Index> dims(verts, 0);
  // starts[i][v]: first coordinate of summand i inside the sum at vertex v
  std::vector<std::vector<Index>> starts(summands.size(), std::vector<Index>(verts, 0));
  for (Index i = 0; i < summands.size(); ++i)
    for (Index v = 0; v < verts; ++v) {
      starts[i][v] = dims[v];
      dims[v] += summands[i].dim(v);
    }
  std::vector<Mat> action;
  const auto& q = alg.quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrow(a);
    Mat act(dims[ar.target], dims[ar.source], p);
    for (Index i = 0; i < summands.size(); ++i) {
      const Mat& sa = summands[i].action(a);
      for (Index r = 0; r < sa.rows(); ++r)
        for (Index c = 0; c < sa.cols(); ++c) act(starts[i][ar.target] + r, starts[i][ar.source] + c) = sa(r, c);
    }
    action.push_back(std::move(act));
  }
  Representation sum = Representation::unchecked(alg, dims, std::move(action));
  DirectSum out{sum, {}, {}};
  for (Index i = 0; i < summands.size(); ++i) {
    std::vector<Mat> inj, pr;
    for (Index v = 0; v < verts; ++v) {
      Mat in(dims[v], summands[i].dim(v), p), out_block(summands[i].dim(v), dims[v], p);
      for (Index k = 0; k < summands[i].dim(v); ++k) {
        in(starts[i][v] + k, k) = 1;
        out_block(k, starts[i][v] + k) = 1;
      }
      inj.push_back(std::move(in));
      pr.push_back(std::move(out_block));
    }
    out.injections.push_back(ModuleMap::unchecked(summands[i], sum, std::move(inj)));
    out.projections.push_back(ModuleMap::unchecked(sum, summands[i], std::move(pr)));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Representation>& summands) {
  if (summands.empty()) throw InvalidArgument("direct_sum: empty list needs an explicit algebra");
  return direct_sum(summands, summands.front().algebra());
}

ModuleMap map_into_sum(const DirectSum& sum, const std::vector<ModuleMap>& components) {
  if (components.size() != sum.injections.size()) throw DimensionMismatch("map_into_sum: one component per summand");
  if (components.empty()) throw InvalidArgument("map_into_sum: no components");
  ModuleMap out = ModuleMap::zero(components.front().source(), sum.object);
  for (Index i = 0; i < components.size(); ++i) out = out + compose(sum.injections[i], components[i]);
  return out;
}

ModuleMap map_out_of_sum(const DirectSum& sum, const std::vector<ModuleMap>& components) {
  if (components.size() != sum.projections.size()) throw DimensionMismatch("map_out_of_sum: one component per summand");
  if (components.empty()) throw InvalidArgument("map_out_of_sum: no components");
  ModuleMap out = ModuleMap::zero(sum.object, components.front().target());
  for (Index i = 0; i < components.size(); ++i) out = out + compose(components[i], sum.projections[i]);
  return out;
}

// ---------------------------------------------------------------- injective hulls

InjectiveHull injective_hull(const Representation& m) {
  const auto& alg = m.algebra();
  const Index verts = alg.vertex_count();
  const Residue p = m.modulus();
  const Subobject soc = socle(m);
  std::vector<Representation> parts;
  std::vector<Index> part_vertex;
  for (Index v = 0; v < verts; ++v) {
    if (soc.object.dim(v) == 0) continue;
    const Representation iv = indecomposable_injective(alg, v);
    for (Index k = 0; k < soc.object.dim(v); ++k) {
      parts.push_back(iv);
      part_vertex.push_back(v);
    }
  }
  DirectSum e = direct_sum(parts, alg);
  if (m.is_zero()) return InjectiveHull{e.object, ModuleMap::zero(m, e.object), part_vertex};

  // psi: the k-th socle basis vector at v goes to the socle of the k-th copy of I(v)
  std::vector<Mat> psi_blocks;
  for (Index v = 0; v < verts; ++v) psi_blocks.emplace_back(e.object.dim(v), soc.object.dim(v), p);
  {
    std::vector<Index> seen(verts, 0);
    for (Index i = 0; i < parts.size(); ++i) {
      const Index v = part_vertex[i];
      const Vec s = e.injections[i].apply(injective_socle_vector(alg, v));
      const Index col = seen[v]++;
      for (Index r = 0; r < e.object.dim(v); ++r) psi_blocks[v](r, col) = s[e.object.offset(v) + r];
    }
  }
  const ModuleMap psi = ModuleMap::unchecked(soc.object, e.object, std::move(psi_blocks));

  const auto homs = hom_space(m, e.object);
  Mat system(psi.coordinates().size(), homs.size(), p);
  for (Index i = 0; i < homs.size(); ++i) {
    const Vec c = compose(homs[i], soc.inclusion).coordinates();
    for (Index r = 0; r < c.size(); ++r) system(r, i) = c[r];
  }
  auto coeffs = solve(system, psi.coordinates());
  if (!coeffs) throw TheoremViolation("injective_hull: socle embedding does not extend");
  ModuleMap eta = combine(homs, *coeffs, m, e.object);
  if (!eta.is_injective()) throw TheoremViolation("injective_hull: extension is not a monomorphism");
  const Subobject esoc = socle(e.object);
  const auto img = image_subspaces(eta);
  for (Index v = 0; v < verts; ++v) {
    const Mat sv = image_subspaces(esoc.inclusion)[v];
    if (sv.rows() > 0 && !subspace_contains(img[v], sv)) throw TheoremViolation("injective_hull: image is not essential");
  }
  return InjectiveHull{e.object, eta, part_vertex};
}

bool is_injective(const Representation& m) {
  const auto& alg = m.algebra();
  const auto soc = socle_multiplicities(m);
  Index hull_dim = 0;
  for (Index v = 0; v < soc.size(); ++v) {
    if (soc[v] == 0) continue;
    Index iv = 0;
    for (Index w = 0; w < alg.vertex_count(); ++w) iv += alg.basis_between(w, v).size();
    hull_dim += soc[v] * iv;
  }
  return hull_dim == m.total_dimension();
}

// ---------------------------------------------------------------- isomorphism

namespace {

bool blocks_invertible(const std::vector<ModuleMap>& homs, const Vec& coeffs, const Representation& m,
                       const Representation& n) {
  const Residue p = m.modulus();
  for (Index v = 0; v < m.dims().size(); ++v) {
    const Index d = m.dim(v);
    if (d == 0) continue;
    Mat b(d, d, p);
    for (Index i = 0; i < homs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      const Mat& h = homs[i].block(v);
      for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c)
          if (h(r, c) != 0) b(r, c) = modp::add(b(r, c), modp::mul(coeffs[i], h(r, c), p), p);
    }
    if (rank(b) != d) return false;
  }
  (void)n;
  return true;
}

}  // namespace

std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n,
                                       const IsoSearchOptions& options) {
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return ModuleMap::zero(m, n);
  if (m == n) return ModuleMap::identity(m);
  const auto homs = hom_space(m, n);
  const Index h = homs.size();
  if (h == 0) return std::nullopt;
  // An isomorphism identifies all four Hom spaces.
  if (hom_dim(m, m) != h || hom_dim(n, n) != h || hom_dim(n, m) != h) return std::nullopt;
  const Residue p = m.modulus();

  std::mt19937_64 rng(options.seed);
  Vec coeffs(h, 0);
  for (Index t = 0; t < options.random_trials; ++t) {
    for (auto& c : coeffs) c = static_cast<Residue>(rng() % p);
    if (blocks_invertible(homs, coeffs, m, n)) return combine(homs, coeffs, m, n);
  }

  std::uint64_t space = 1;
  bool small = true;
  for (Index i = 0; i < h && small; ++i) {
    space *= p;
    small = space <= options.exhaustive_budget;
  }
  if (!small) {
    throw Undecided("is_isomorphic: Hom space of dimension " + std::to_string(h) +
                    " is beyond the exhaustive budget and no random isomorphism was found");
  }
  std::fill(coeffs.begin(), coeffs.end(), 0);
  while (true) {
    if (blocks_invertible(homs, coeffs, m, n)) return combine(homs, coeffs, m, n);
    Index k = 0;
    while (k < h) {
      coeffs[k] = (coeffs[k] + 1) % p;
      if (coeffs[k] != 0) break;
      ++k;
    }
    if (k == h) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- projective resolutions and Ext

namespace {

struct Cover {
  Representation object;
  ModuleMap map;
};

Cover projective_cover(const Representation& x) {
  const auto& alg = x.algebra();
  const Index verts = alg.vertex_count();
  const Residue p = x.modulus();
  const auto rad = radical_subspaces(x);
  std::vector<std::pair<Index, Vec>> generators;
  for (Index v = 0; v < verts; ++v) {
    const RrefResult rr = rref(rad[v].rows() ? rad[v] : Mat(0, x.dim(v), p));
    std::vector<bool> pivot(x.dim(v), false);
    for (auto c : rr.pivot_columns) pivot[c] = true;
    for (Index c = 0; c < x.dim(v); ++c) {
      if (pivot[c]) continue;
      Vec e(x.dim(v), 0);
      e[c] = 1;
      generators.emplace_back(v, std::move(e));
    }
  }
  std::vector<Representation> parts;
  for (const auto& g : generators) parts.push_back(indecomposable_projective(alg, g.first));
  DirectSum sum = direct_sum(parts, alg);
  std::vector<ModuleMap> comps;
  for (Index i = 0; i < generators.size(); ++i) {
    const auto& [v, gen] = generators[i];
    std::vector<Mat> blocks;
    for (Index w = 0; w < verts; ++w) {
      const auto& paths = alg.basis_between(v, w);
      Mat b(x.dim(w), paths.size(), p);
      for (Index j = 0; j < paths.size(); ++j) {
        const Vec img = path_action(x, alg.path_basis()[paths[j]]).apply(gen);
        for (Index r = 0; r < img.size(); ++r) b(r, j) = img[r];
      }
      blocks.push_back(std::move(b));
    }
    comps.push_back(ModuleMap::unchecked(parts[i], x, std::move(blocks)));
  }
  if (comps.empty()) return Cover{sum.object, ModuleMap::zero(sum.object, x)};
  return Cover{sum.object, map_out_of_sum(sum, comps)};
}

}  // namespace

ProjectiveResolution projective_resolution(const Representation& m, Index length) {
  ProjectiveResolution res;
  Cover c0 = projective_cover(m);
  if (!c0.map.is_surjective()) throw TheoremViolation("projective cover is not surjective");
  res.terms.push_back(c0.object);
  res.augmentation = c0.map;
  ModuleMap previous = c0.map;
  for (Index i = 1; i <= length; ++i) {
    const Subobject k = kernel(previous);
    Cover c = projective_cover(k.object);
    ModuleMap d = compose(k.inclusion, c.map);
    res.terms.push_back(c.object);
    res.differentials.push_back(d);
    previous = d;
  }
  return res;
}

Index ext_dim(const Representation& m, const Representation& n, Index j, Index jmax) {
  require_same_algebra(m, n, "ext_dim");
  if (j > jmax) {
    throw InvalidArgument("ext_dim: degree " + std::to_string(j) + " exceeds the configured bound " + std::to_string(jmax));
  }
  const ProjectiveResolution res = projective_resolution(m, j + 1);
  auto coboundary_rank = [&](Index i) -> Index {
    // rank of Hom(P_i, N) -> Hom(P_{i+1}, N), precomposition with d_{i+1}
    const auto homs = hom_space(res.terms[i], n);
    const ModuleMap& d = res.differentials[i];
    std::vector<Vec> rows;
    for (const auto& h : homs) rows.push_back(compose(h, d).coordinates());
    if (rows.empty() || rows.front().empty()) return 0;
    return rank(Mat::from_rows(rows.front().size(), m.modulus(), rows));
  };
  const Index hj = hom_dim(res.terms[j], n);
  const Index out = coboundary_rank(j);
  const Index in = j == 0 ? 0 : coboundary_rank(j - 1);
  return hj - out - in;
}

// ---------------------------------------------------------------- local endomorphism rings

namespace {

bool ideal_is_nilpotent(std::vector<Mat> ideal, Index bound) {
  if (ideal.empty()) return true;
  const Residue p = ideal.front().modulus();
  const Index n = ideal.front().rows();
  auto span = [&](const std::vector<Mat>& mats) {
    std::vector<Vec> rows;
    for (const auto& m : mats) rows.emplace_back(m.entries().begin(), m.entries().end());
    if (rows.empty()) return Mat(0, n * n, p);
    return row_space(Mat::from_rows(n * n, p, rows));
  };
  auto unflatten = [&](const Mat& s) {
    std::vector<Mat> out;
    for (Index r = 0; r < s.rows(); ++r) {
      Mat m(n, n, p);
      for (Index k = 0; k < n * n; ++k) m(k / n, k % n) = s(r, k);
      out.push_back(std::move(m));
    }
    return out;
  };
  std::vector<Mat> power = unflatten(span(ideal));
  for (Index step = 0; step <= bound; ++step) {
    if (power.empty()) return true;
    std::vector<Mat> next;
    for (const auto& a : ideal)
      for (const auto& b : power) next.push_back(a * b);
    power = unflatten(span(next));
  }
  return power.empty();
}

}  // namespace

bool has_local_endomorphism_ring(const Representation& m, std::uint64_t budget) {
  if (m.is_zero()) return false;
  const auto homs = hom_space(m, m);
  const Index h = homs.size();
  const Residue p = m.modulus();
  std::uint64_t size = 1;
  bool small = true;
  for (Index i = 0; i < h && small; ++i) {
    size *= p;
    small = size <= budget;
  }
  if (small) {
    // local iff the non-units form an additive subgroup, i.e. a subspace
    Vec coeffs(h, 0);
    std::uint64_t nonunits = 0;
    Mat span(0, h, p);
    while (true) {
      if (!blocks_invertible(homs, coeffs, m, m)) {
        ++nonunits;
        if (!subspace_contains(span, Mat::from_rows(h, p, {coeffs}))) span = subspace_sum(span, Mat::from_rows(h, p, {coeffs}));
      }
      Index k = 0;
      while (k < h) {
        coeffs[k] = (coeffs[k] + 1) % p;
        if (coeffs[k] != 0) break;
        ++k;
      }
      if (k == h) break;
    }
    std::uint64_t span_size = 1;
    for (Index i = 0; i < span.rows(); ++i) span_size *= p;
    return span_size == nonunits && span.rows() < h;
  }
  // K = endomorphisms vanishing on the socle: an ideal with End/K inside End(soc).
  const Subobject soc = socle(m);
  std::vector<Vec> restricted;
  for (const auto& f : homs) restricted.push_back(compose(f, soc.inclusion).coordinates());
  const Mat res = Mat::from_rows(restricted.front().size(), p, restricted).transposed();
  const Index image_dim = rank(res);
  if (image_dim != 1) throw Undecided("has_local_endomorphism_ring: socle restriction is inconclusive");
  const Mat kcoeffs = kernel_basis(res);
  std::vector<Mat> ideal;
  for (Index r = 0; r < kcoeffs.rows(); ++r) ideal.push_back(combine(homs, kcoeffs.row_vec(r), m, m).total_matrix());
  return ideal_is_nilpotent(ideal, m.total_dimension());
}

// ---------------------------------------------------------------- enumeration

std::vector<Representation> enumerate_representations(const BoundAlgebra& alg, Index max_dim, std::uint64_t limit) {
  const Index verts = alg.vertex_count();
  const auto& q = alg.quiver();
  const Residue p = alg.modulus();
  std::vector<Representation> out;
  std::vector<Index> dims(verts, 0);
  std::uint64_t examined = 0;
  while (true) {
    Index entries = 0;
    for (const auto& ar : q.arrows()) entries += dims[ar.target] * dims[ar.source];
    std::uint64_t count = 1;
    for (Index i = 0; i < entries; ++i) {
      count *= p;
      if (count > limit) break;
    }
    examined += count;
    if (examined > limit) {
      throw InvalidArgument("enumerate_representations: more than " + std::to_string(limit) + " candidates");
    }
    Vec values(entries, 0);
    while (true) {
      std::vector<Mat> action;
      Index pos = 0;
      for (const auto& ar : q.arrows()) {
        Mat a(dims[ar.target], dims[ar.source], p);
        for (Index r = 0; r < a.rows(); ++r)
          for (Index c = 0; c < a.cols(); ++c) a(r, c) = values[pos++];
        action.push_back(std::move(a));
      }
      try {
        out.emplace_back(alg, dims, std::move(action));
      } catch (const InvalidArgument&) {
        // relations fail on this choice of matrices
      }
      Index k = 0;
      while (k < entries) {
        values[k] = (values[k] + 1) % p;
        if (values[k] != 0) break;
        ++k;
      }
      if (k == entries) break;
    }
    Index v = 0;
    while (v < verts) {
      if (++dims[v] <= max_dim) break;
      dims[v] = 0;
      ++v;
    }
    if (v == verts) break;
  }
  return out;
}

std::vector<Representation> iso_class_representatives(const std::vector<Representation>& reps,
                                                       const IsoSearchOptions& options) {
  using Key = std::tuple<std::vector<Index>, Index, std::vector<Index>, std::vector<Index>, std::vector<Index>>;
  std::map<Key, std::vector<Index>> buckets;
  std::vector<Representation> out;
  for (const auto& r : reps) {
    std::vector<Index> ranks;
    for (const auto& a : r.actions()) ranks.push_back(rank(a));
    std::vector<Index> top;
    const auto rad = radical_subspaces(r);
    for (Index v = 0; v < rad.size(); ++v) top.push_back(r.dim(v) - rad[v].rows());
    Key key{r.dims(), hom_dim(r, r), socle_multiplicities(r), top, ranks};
    auto& bucket = buckets[key];
    bool seen = false;
    for (Index idx : bucket) {
      if (is_isomorphic(out[idx], r, options)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(out.size());
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace csheaf
