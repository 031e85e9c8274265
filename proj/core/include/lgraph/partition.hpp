#ifndef LGRAPH_PARTITION_HPP
#define LGRAPH_PARTITION_HPP

#include <cstddef>
#include <vector>

#include "lgraph/graph.hpp"

namespace lgraph {

/// The partition Omega_l(E) = E^0 / ~_l, where v ~_l w iff v and w receive
/// exactly the same labelled words of length at most l.
struct LevelPartition {
  std::size_t level = 1;
  /// Pairwise disjoint, nonempty, covering E^0; sorted by lowest member.
  std::vector<VertexSet> classes;
  /// True when ~_level already equals ~_inf.
  bool stabilized = false;

  /// [v]_level
  VertexSet class_of(VertexId v) const;
  friend bool operator==(const LevelPartition&, const LevelPartition&) = default;
};

/// Refinement history of ~_l over all levels.
///
/// v ~_l w iff, for every word alpha with 1 <= |alpha| <= l, v is in r(alpha)
/// exactly when w is. The distinct range sets r(alpha) are produced by a
/// subset construction started at E^0; a set first reached at length k only
/// has successors first reached at length <= k+1, so the construction stops
/// once a length adds no new set, and the partition at that point is ~_inf.
class PartitionTower {
 public:
  explicit PartitionTower(const LabelledGraph& g);

  /// Smallest l with ~_l = ~_m for every m >= l.
  std::size_t stabilization_depth() const noexcept { return depth_; }
  /// Omega_l(E) for any l >= 1.
  LevelPartition at(std::size_t level) const;
  const LevelPartition& stable() const noexcept { return levels_.back(); }
  /// Distinct nonempty range sets r(alpha), in order of first appearance.
  const std::vector<VertexSet>& range_sets() const noexcept { return ranges_; }

 private:
  std::vector<LevelPartition> levels_;  // levels_[i] is level i+1, up to depth_
  std::vector<VertexSet> ranges_;
  std::size_t depth_ = 1;
};

LevelPartition level_partition(const LabelledGraph& g, std::size_t level);

struct StablePartition {
  LevelPartition partition;
  /// First level at which the partition equals ~_inf.
  std::size_t depth = 1;
};

StablePartition stable_partition(const LabelledGraph& g);

/// [v]_l
VertexSet generalized_vertex(const LabelledGraph& g, VertexId v, std::size_t level);

}  // namespace lgraph

#endif  // LGRAPH_PARTITION_HPP
