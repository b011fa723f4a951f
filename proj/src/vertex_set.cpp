#include "csheaf/vertex_set.hpp"

#include "csheaf/error.hpp"

namespace csheaf {

void VertexSet::insert(Index v) {
  if (v >= kMaxVertices) throw InvalidArgument("vertex index " + std::to_string(v) + " exceeds 63");
  bits_ |= std::uint64_t{1} << v;
}

std::vector<Index> VertexSet::members() const {
  std::vector<Index> out;
  for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Index>(std::countr_zero(b)));
  return out;
}

std::vector<VertexSet> all_subsets(Index n, Index cap) {
  if (n > cap) {
    throw InvalidArgument("powerset enumeration over " + std::to_string(n) +
                          " vertices exceeds the cap of " + std::to_string(cap));
  }
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  return out;
}

}  // namespace csheaf
