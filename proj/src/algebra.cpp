#include "csheaf/algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "csheaf/error.hpp"

namespace csheaf {

// ---------------------------------------------------------------- quiver

Quiver::Quiver(Index vertex_count) {
  for (Index v = 0; v < vertex_count; ++v) vertex_names_.push_back(std::to_string(v + 1));
}

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  validate();
}

Index Quiver::add_vertex(std::string name) {
  if (find_vertex(name)) throw InvalidArgument("duplicate vertex name '" + name + "'");
  vertex_names_.push_back(std::move(name));
  return vertex_names_.size() - 1;
}

Index Quiver::add_arrow(std::string name, Index source, Index target) {
  if (source >= vertex_count() || target >= vertex_count()) {
    throw InvalidArgument("arrow '" + name + "' has an endpoint outside the quiver");
  }
  if (find_arrow(name)) throw InvalidArgument("duplicate arrow name '" + name + "'");
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

const std::string& Quiver::vertex_name(Index v) const {
  if (v >= vertex_count()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return vertex_names_[v];
}

const Arrow& Quiver::arrow(Index a) const {
  if (a >= arrows_.size()) throw InvalidArgument("arrow " + std::to_string(a) + " out of range");
  return arrows_[a];
}

std::optional<Index> Quiver::find_vertex(const std::string& name) const {
  for (Index v = 0; v < vertex_names_.size(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<Index> Quiver::find_arrow(const std::string& name) const {
  for (Index a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

std::vector<Index> Quiver::arrows_from(Index v) const {
  std::vector<Index> out;
  for (Index a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

void Quiver::validate() const {
  for (Index v = 0; v < vertex_names_.size(); ++v) {
    if (vertex_names_[v].empty()) throw InvalidArgument("empty vertex name");
    for (Index w = v + 1; w < vertex_names_.size(); ++w)
      if (vertex_names_[v] == vertex_names_[w])
        throw InvalidArgument("duplicate vertex name '" + vertex_names_[v] + "'");
  }
  for (Index a = 0; a < arrows_.size(); ++a) {
    const auto& ar = arrows_[a];
    if (ar.name.empty()) throw InvalidArgument("empty arrow name");
    if (ar.source >= vertex_count() || ar.target >= vertex_count())
      throw InvalidArgument("arrow '" + ar.name + "' has an endpoint outside the quiver");
    for (Index b = a + 1; b < arrows_.size(); ++b)
      if (ar.name == arrows_[b].name) throw InvalidArgument("duplicate arrow name '" + ar.name + "'");
  }
}

// ---------------------------------------------------------------- paths

Path concatenate(const Path& first, const Path& second) {
  if (first.target != second.source) throw InvalidArgument("concatenate: paths do not meet");
  Path out{first.source, second.target, first.arrows};
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

Path path_from_written(const Quiver& q, const std::vector<Index>& written) {
  if (written.empty()) throw InvalidArgument("path_from_written: empty arrow list");
  Path p;
  p.arrows.assign(written.rbegin(), written.rend());
  p.source = q.arrow(p.arrows.front()).source;
  Index at = p.source;
  for (Index a : p.arrows) {
    const auto& ar = q.arrow(a);
    if (ar.source != at) throw InvalidArgument("arrows do not compose: '" + ar.name + "' does not start where the previous arrow ends");
    at = ar.target;
  }
  p.target = at;
  return p;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex_name(p.source);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrow(*it).name;
  }
  return out;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  for (Index i = a.length(); i-- > 0;) {
    const auto& na = q.arrow(a.arrows[i]).name;
    const auto& nb = q.arrow(b.arrows[i]).name;
    if (na != nb) return na < nb;
  }
  return false;
}

namespace {

struct PathKeyLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

bool path_is_valid(const Quiver& q, const Path& p) {
  if (p.source >= q.vertex_count() || p.target >= q.vertex_count()) return false;
  Index at = p.source;
  for (Index a : p.arrows) {
    if (a >= q.arrows().size() || q.arrows()[a].source != at) return false;
    at = q.arrows()[a].target;
  }
  return at == p.target;
}

}  // namespace

// ---------------------------------------------------------------- algebra

struct BoundAlgebra::Impl {
  Quiver quiver;
  Residue modulus = 2;
  std::vector<Relation> relations;
  Index max_path_length = 0;
  Index vanishing_length = 0;
  std::vector<Path> basis;
  std::vector<std::vector<Index>> between;  // source * n + target
  std::vector<Index> idempotents;
  std::map<Path, Vec, PathKeyLess> normal_forms;  // every path shorter than vanishing_length
  std::vector<Vec> products;                      // i * dim + j
};

const BoundAlgebra::Impl& BoundAlgebra::impl() const {
  if (!impl_) throw InvalidArgument("use of an empty BoundAlgebra");
  return *impl_;
}

const Quiver& BoundAlgebra::quiver() const { return impl().quiver; }
Residue BoundAlgebra::modulus() const { return impl().modulus; }
const std::vector<Relation>& BoundAlgebra::relations() const { return impl().relations; }
Index BoundAlgebra::max_path_length() const { return impl().max_path_length; }
Index BoundAlgebra::vanishing_length() const { return impl().vanishing_length; }
const std::vector<Path>& BoundAlgebra::path_basis() const { return impl().basis; }

const std::vector<Index>& BoundAlgebra::basis_between(Index source, Index target) const {
  const auto n = vertex_count();
  if (source >= n || target >= n) throw InvalidArgument("basis_between: vertex out of range");
  return impl().between[source * n + target];
}

Index BoundAlgebra::idempotent(Index v) const {
  if (v >= vertex_count()) throw InvalidArgument("idempotent: vertex out of range");
  return impl().idempotents[v];
}

Vec BoundAlgebra::normal_form(const Path& p) const {
  const auto& im = impl();
  if (!path_is_valid(im.quiver, p)) throw InvalidArgument("normal_form: not a path of the quiver");
  if (p.length() >= im.vanishing_length) return Vec(im.basis.size(), 0);
  return im.normal_forms.at(p);
}

const Vec& BoundAlgebra::product(Index i, Index j) const {
  const auto& im = impl();
  const Index d = im.basis.size();
  if (i >= d || j >= d) throw InvalidArgument("product: basis index out of range");
  return im.products[i * d + j];
}

Vec BoundAlgebra::multiply(const Vec& x, const Vec& y) const {
  const auto& im = impl();
  const Index d = im.basis.size();
  const Residue p = im.modulus;
  if (x.size() != d || y.size() != d) throw DimensionMismatch("multiply: vector length");
  Vec out(d, 0);
  for (Index i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (Index j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Residue c = modp::mul(x[i], y[j], p);
      const auto& pij = im.products[i * d + j];
      for (Index k = 0; k < d; ++k)
        if (pij[k] != 0) out[k] = modp::add(out[k], modp::mul(c, pij[k], p), p);
    }
  }
  return out;
}

Vec BoundAlgebra::unit() const {
  Vec out(dimension(), 0);
  for (Index v = 0; v < vertex_count(); ++v) out[idempotent(v)] = 1;
  return out;
}

namespace {

struct NormalizedRelation {
  Index source = 0;
  Index target = 0;
  Index min_length = 0;
  Index max_length = 0;
  std::vector<std::pair<Residue, Path>> terms;
};

NormalizedRelation normalize(const Quiver& q, Residue p, const Relation& r, Index number) {
  const std::string where = "relation " + std::to_string(number + 1);
  std::map<Path, Residue, PathKeyLess> combined;
  for (const auto& t : r.terms) {
    if (!path_is_valid(q, t.path)) throw NonAdmissible(where + ": term is not a path of the quiver");
    auto& c = combined[t.path];
    c = modp::add(c, modp::reduce(t.coefficient, p), p);
  }
  NormalizedRelation out;
  bool first = true;
  for (const auto& [path, c] : combined) {
    if (c == 0) continue;
    if (path.length() < 2) throw NonAdmissible(where + ": contains a path of length < 2");
    if (first) {
      out.source = path.source;
      out.target = path.target;
      out.min_length = out.max_length = path.length();
      first = false;
    } else if (path.source != out.source || path.target != out.target) {
      throw NonAdmissible(where + ": terms are not parallel paths");
    }
    out.min_length = std::min(out.min_length, path.length());
    out.max_length = std::max(out.max_length, path.length());
    out.terms.emplace_back(c, path);
  }
  return out;
}

class PathTable {
 public:
  PathTable(const Quiver& q, Index budget) : q_(q), budget_(budget) {
    std::vector<Path> zero;
    for (Index v = 0; v < q.vertex_count(); ++v) zero.push_back(Path::trivial(v));
    total_ = zero.size();
    by_length_.push_back(std::move(zero));
  }

  const std::vector<Path>& of_length(Index len) {
    while (by_length_.size() <= len) {
      std::vector<Path> next;
      for (const auto& path : by_length_.back()) {
        for (Index a : q_.arrows_from(path.target)) {
          Path ext = path;
          ext.arrows.push_back(a);
          ext.target = q_.arrow(a).target;
          next.push_back(std::move(ext));
        }
      }
      total_ += next.size();
      if (total_ > budget_) {
        throw NotFiniteDimensional("path enumeration exceeded " + std::to_string(budget_) +
                                   " paths before a vanishing length was certified");
      }
      by_length_.push_back(std::move(next));
    }
    return by_length_[len];
  }

 private:
  const Quiver& q_;
  Index budget_;
  Index total_ = 0;
  std::vector<std::vector<Path>> by_length_;
};

using SparseElement = std::map<Path, Residue, PathKeyLess>;

// All elements w-then-rho-then-u with |u| + |w| <= slack, truncated to paths
// shorter than `cutoff`, grouped by (source, target).
template <typename Sink>
void for_each_multiple(const Quiver& q, PathTable& table, const NormalizedRelation& rel, Index slack,
                       Index cutoff, Residue p, Sink&& sink) {
  for (Index lw = 0; lw <= slack; ++lw) {
    for (const auto& w : table.of_length(lw)) {
      if (w.target != rel.source) continue;
      for (Index lu = 0; lu + lw <= slack; ++lu) {
        for (const auto& u : table.of_length(lu)) {
          if (u.source != rel.target) continue;
          SparseElement el;
          for (const auto& [c, path] : rel.terms) {
            Path full = concatenate(concatenate(w, path), u);
            if (full.length() >= cutoff) continue;
            auto& slot = el[full];
            slot = modp::add(slot, c, p);
          }
          std::erase_if(el, [](const auto& kv) { return kv.second == 0; });
          if (!el.empty()) sink(w.source, u.target, el);
        }
      }
    }
  }
  (void)q;
}

// Rows of the generator matrix for one (source, target) block.
struct Block {
  std::map<Path, Index, PathKeyLess> column;
  std::vector<Path> paths;
  std::vector<SparseElement> rows;

  Index column_of(const Path& path) {
    auto [it, inserted] = column.emplace(path, paths.size());
    if (inserted) paths.push_back(path);
    return it->second;
  }
};

bool all_length_m_paths_in_span(PathTable& table, const Quiver& q,
                                const std::vector<NormalizedRelation>& rels, Index L, Index m, Residue p) {
  const auto& targets = table.of_length(m);
  if (targets.empty()) return true;
  if (rels.empty()) return false;
  const Index n = q.vertex_count();
  std::vector<Block> blocks(n * n);
  for (const auto& rel : rels) {
    if (rel.max_length > L) continue;
    for_each_multiple(q, table, rel, L - rel.max_length, L + 1, p,
                      [&](Index s, Index t, const SparseElement& el) { blocks[s * n + t].rows.push_back(el); });
  }
  for (const auto& path : targets) blocks[path.source * n + path.target].column_of(path);
  for (auto& b : blocks) {
    for (const auto& row : b.rows)
      for (const auto& kv : row) b.column_of(kv.first);
  }
  for (Index s = 0; s < n; ++s) {
    for (Index t = 0; t < n; ++t) {
      auto& b = blocks[s * n + t];
      std::vector<const Path*> wanted;
      for (const auto& path : targets)
        if (path.source == s && path.target == t) wanted.push_back(&path);
      if (wanted.empty()) continue;
      if (b.rows.empty()) return false;
      Mat gens(b.rows.size(), b.paths.size(), p);
      for (Index r = 0; r < b.rows.size(); ++r)
        for (const auto& [path, c] : b.rows[r]) gens(r, b.column.at(path)) = c;
      const Mat space = row_space(gens);
      Mat units(wanted.size(), b.paths.size(), p);
      for (Index i = 0; i < wanted.size(); ++i) units(i, b.column.at(*wanted[i])) = 1;
      if (!subspace_contains(space, units)) return false;
    }
  }
  return true;
}

}  // namespace

BoundAlgebra build_algebra(const Quiver& q, Residue p, std::vector<Relation> relations, AlgebraOptions options) {
  q.validate();
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime (got " + std::to_string(p) + ")");
  if (q.vertex_count() == 0) throw InvalidArgument("quiver has no vertices");

  std::vector<NormalizedRelation> rels;
  for (Index i = 0; i < relations.size(); ++i) {
    auto r = normalize(q, p, relations[i], i);
    if (!r.terms.empty()) rels.push_back(std::move(r));
  }

  PathTable table(q, options.max_enumerated_paths);

  // Certify J^m in I: every path of length m lies in the span of the
  // multiples u*rho*w of total length at most L.
  std::optional<Index> vanishing;
  for (Index L = 1; L <= options.max_path_length + 1 && !vanishing; ++L) {
    for (Index m = 1; m <= L; ++m) {
      if (all_length_m_paths_in_span(table, q, rels, L, m, p)) {
        vanishing = m;
        break;
      }
    }
  }
  if (!vanishing) {
    throw NotFiniteDimensional("not finite-dimensional within bound: paths of length " +
                               std::to_string(options.max_path_length) + " survive the relations");
  }
  const Index m = *vanishing;
  const Index n = q.vertex_count();

  // A = (paths shorter than m) / (truncated multiples of the relations).
  std::vector<Block> blocks(n * n);
  for (Index len = 0; len < m; ++len)
    for (const auto& path : table.of_length(len)) blocks[path.source * n + path.target].column_of(path);
  for (const auto& rel : rels) {
    if (rel.min_length >= m) continue;
    for_each_multiple(q, table, rel, m - 1 - rel.min_length, m, p,
                      [&](Index s, Index t, const SparseElement& el) { blocks[s * n + t].rows.push_back(el); });
  }

  // Per block: columns sorted largest first so that pivots eliminate long paths.
  struct Reduced {
    std::vector<Path> order;
    RrefResult rr;
    std::vector<bool> is_pivot;
  };
  std::vector<Reduced> reduced(n * n);
  std::vector<Path> basis;
  for (Index b = 0; b < n * n; ++b) {
    auto& blk = blocks[b];
    auto& red = reduced[b];
    red.order = blk.paths;
    std::sort(red.order.begin(), red.order.end(), [&](const Path& x, const Path& y) { return path_less(q, y, x); });
    std::map<Path, Index, PathKeyLess> col;
    for (Index i = 0; i < red.order.size(); ++i) col.emplace(red.order[i], i);
    Mat gens(blk.rows.size(), red.order.size(), p);
    for (Index r = 0; r < blk.rows.size(); ++r)
      for (const auto& [path, c] : blk.rows[r]) gens(r, col.at(path)) = c;
    red.rr = rref(gens);
    red.is_pivot.assign(red.order.size(), false);
    for (auto c : red.rr.pivot_columns) red.is_pivot[c] = true;
    for (Index i = 0; i < red.order.size(); ++i)
      if (!red.is_pivot[i]) basis.push_back(red.order[i]);
  }
  std::sort(basis.begin(), basis.end(), [&](const Path& x, const Path& y) { return path_less(q, x, y); });

  auto impl = std::make_shared<BoundAlgebra::Impl>();
  impl->quiver = q;
  impl->modulus = p;
  impl->relations = std::move(relations);
  impl->max_path_length = options.max_path_length;
  impl->vanishing_length = m;
  impl->basis = basis;
  impl->between.assign(n * n, {});
  impl->idempotents.assign(n, 0);
  std::map<Path, Index, PathKeyLess> basis_index;
  for (Index i = 0; i < basis.size(); ++i) {
    basis_index.emplace(basis[i], i);
    impl->between[basis[i].source * n + basis[i].target].push_back(i);
    if (basis[i].length() == 0) impl->idempotents[basis[i].source] = i;
  }

  const Index d = basis.size();
  for (Index b = 0; b < n * n; ++b) {
    const auto& red = reduced[b];
    std::vector<Index> pivot_row(red.order.size(), 0);
    for (Index r = 0; r < red.rr.pivot_columns.size(); ++r) pivot_row[red.rr.pivot_columns[r]] = r;
    for (Index i = 0; i < red.order.size(); ++i) {
      Vec nf(d, 0);
      if (!red.is_pivot[i]) {
        nf[basis_index.at(red.order[i])] = 1;
      } else {
        const Index r = pivot_row[i];
        for (Index f = 0; f < red.order.size(); ++f) {
          if (red.is_pivot[f]) continue;
          const Residue c = red.rr.reduced(r, f);
          if (c != 0) nf[basis_index.at(red.order[f])] = modp::neg(c, p);
        }
      }
      impl->normal_forms.emplace(red.order[i], std::move(nf));
    }
  }

  impl->products.assign(d * d, Vec(d, 0));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const Path& bi = basis[i];
      const Path& bj = basis[j];
      if (bj.target != bi.source) continue;
      Path prod = concatenate(bj, bi);
      if (prod.length() < m) impl->products[i * d + j] = impl->normal_forms.at(prod);
    }
  }

  return BoundAlgebra(std::move(impl));
}

AlgebraCenter algebra_center(const BoundAlgebra& alg) {
  const Index d = alg.dimension();
  const Residue p = alg.modulus();
  // Unknown z = sum_k z_k b_k; equations (z b_i - b_i z)[c] = 0.
  Mat eqs(d * d, d, p);
  for (Index i = 0; i < d; ++i) {
    for (Index k = 0; k < d; ++k) {
      const auto& zb = alg.product(k, i);
      const auto& bz = alg.product(i, k);
      for (Index c = 0; c < d; ++c) eqs(i * d + c, k) = modp::sub(zb[c], bz[c], p);
    }
  }
  const Mat basis = row_space(kernel_basis(eqs));
  AlgebraCenter out;
  for (Index i = 0; i < basis.rows(); ++i) out.elements.push_back(basis.row_vec(i));
  out.ring = subalgebra_presentation(basis, [&](const Vec& x, const Vec& y) { return alg.multiply(x, y); }, alg.unit());
  return out;
}

}  // namespace csheaf
