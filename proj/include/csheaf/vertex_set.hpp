#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "csheaf/exactlin.hpp"

namespace csheaf {

/// A set of quiver vertices, stored as a bit mask (at most 64 vertices).
class VertexSet {
 public:
  static constexpr Index kMaxVertices = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Index> members) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(Index n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_members(const std::vector<Index>& members) {
    VertexSet s;
    for (auto v : members) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Index v) const noexcept { return v < 64 && ((bits_ >> v) & 1u); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept { return std::popcount(bits_); }
  void insert(Index v);
  void erase(Index v) {
    if (v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<Index> members() const;

  /// Complement inside {0, ..., n-1}.
  VertexSet complement(Index n) const { return VertexSet(full(n).bits_ & ~bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Default hard cap on vertex counts for exhaustive powerset sweeps.
inline constexpr Index kPowersetVertexCap = 12;

/// Every subset of {0, ..., n-1}, in increasing bit-mask order.
/// Throws InvalidArgument when n exceeds `cap`.
std::vector<VertexSet> all_subsets(Index n, Index cap = kPowersetVertexCap);

}  // namespace csheaf
