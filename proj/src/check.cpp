#include "csheaf/check.hpp"

#include <sstream>

namespace csheaf {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::undecided:
      return "undecided";
  }
  return "?";
}

Outcome combine_outcomes(const std::vector<Check>& checks) {
  Outcome out = Outcome::pass;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::fail) return Outcome::fail;
    if (c.outcome == Outcome::undecided) out = Outcome::undecided;
  }
  return out;
}

std::string format_vertices(const Quiver& q, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Index v : s.members()) {
    if (!first) out += ",";
    out += q.vertex_name(v);
    first = false;
  }
  return out + "}";
}

std::string format_dims(const std::vector<Index>& dims) {
  std::string out = "(";
  for (Index i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

std::string describe(const Representation& m) {
  std::ostringstream os;
  os << "dims " << format_dims(m.dims());
  const auto& q = m.algebra().quiver();
  for (Index a = 0; a < q.arrows().size(); ++a) {
    const Mat& act = m.action(a);
    if (act.empty() || act.is_zero()) continue;
    os << " " << q.arrow(a).name << "=[";
    for (Index r = 0; r < act.rows(); ++r) {
      os << (r ? ";" : "");
      for (Index c = 0; c < act.cols(); ++c) os << (c ? " " : "") << act(r, c);
    }
    os << "]";
  }
  return os.str();
}

}  // namespace csheaf
