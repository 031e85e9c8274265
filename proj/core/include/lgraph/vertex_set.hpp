#ifndef LGRAPH_VERTEX_SET_HPP
#define LGRAPH_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lgraph {

using VertexId = std::uint32_t;

/// Maximum number of vertices a graph may have. Vertex sets are single
/// machine words indexed by the graph's vertex order.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of E^0, stored as a bitmask over vertex indices.
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) noexcept {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet singleton(VertexId v) noexcept {
    return from_bits(std::uint64_t{1} << v);
  }
  /// {0, ..., n-1}
  static constexpr VertexSet prefix(std::size_t n) noexcept {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(VertexId v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  constexpr void insert(VertexId v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  /// Relative complement.
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return a -= b; }

  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

  /// Member indices in increasing order.
  std::vector<VertexId> members() const;

  /// Lowest member; undefined on the empty set.
  constexpr VertexId front() const noexcept {
    return static_cast<VertexId>(std::countr_zero(bits_));
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<VertexId>(std::countr_zero(b)));
    }
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical total order: lexicographic on the sorted member lists, so the
/// empty set comes first and {0} < {0,1} < {1}.
bool canonical_less(VertexSet a, VertexSet b) noexcept;

struct CanonicalLess {
  bool operator()(VertexSet a, VertexSet b) const noexcept { return canonical_less(a, b); }
};

/// Sorts into canonical order and removes duplicates.
void canonicalize(std::vector<VertexSet>& sets);

}  // namespace lgraph

template <>
struct std::hash<lgraph::VertexSet> {
  std::size_t operator()(lgraph::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // LGRAPH_VERTEX_SET_HPP
