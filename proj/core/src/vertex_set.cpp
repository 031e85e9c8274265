#include "lgraph/vertex_set.hpp"

#include <algorithm>

namespace lgraph {

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

bool canonical_less(VertexSet a, VertexSet b) noexcept {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    auto lx = std::countr_zero(x);
    auto ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace lgraph
