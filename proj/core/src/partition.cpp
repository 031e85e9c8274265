#include "lgraph/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lgraph {

namespace {

std::vector<VertexSet> refine(const std::vector<VertexSet>& classes, VertexSet by) {
  std::vector<VertexSet> out;
  out.reserve(classes.size() + 1);
  for (VertexSet c : classes) {
    VertexSet in = c & by;
    VertexSet out_part = c - by;
    if (!in.empty()) out.push_back(in);
    if (!out_part.empty()) out.push_back(out_part);
  }
  return out;
}

void sort_classes(std::vector<VertexSet>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
}

}  // namespace

VertexSet LevelPartition::class_of(VertexId v) const {
  for (VertexSet c : classes) {
    if (c.contains(v)) return c;
  }
  throw std::out_of_range("vertex not covered by partition");
}

PartitionTower::PartitionTower(const LabelledGraph& g) {
  std::vector<VertexSet> classes{g.all_vertices()};
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> frontier{g.all_vertices()};
  for (std::size_t level = 1;; ++level) {
    std::vector<VertexSet> next;
    for (VertexSet s : frontier) {
      for (SymbolId a = 0; a < g.num_symbols(); ++a) {
        VertexSet r = g.step(s, a);
        if (r.empty() || !seen.insert(r).second) continue;
        next.push_back(r);
        ranges_.push_back(r);
        classes = refine(classes, r);
      }
    }
    if (next.empty() && level > 1) break;
    sort_classes(classes);
    levels_.push_back({level, classes, false});
    frontier = std::move(next);
  }
  const auto& last = levels_.back().classes;
  depth_ = levels_.size();
  while (depth_ > 1 && levels_[depth_ - 2].classes == last) --depth_;
  levels_.resize(depth_);
  levels_.back().stabilized = true;
}

LevelPartition PartitionTower::at(std::size_t level) const {
  if (level == 0) throw std::invalid_argument("partition level must be >= 1");
  if (level <= levels_.size()) return levels_[level - 1];
  LevelPartition p = levels_.back();
  p.level = level;
  return p;
}

LevelPartition level_partition(const LabelledGraph& g, std::size_t level) {
  return PartitionTower(g).at(level);
}

StablePartition stable_partition(const LabelledGraph& g) {
  PartitionTower tower(g);
  return {tower.stable(), tower.stabilization_depth()};
}

VertexSet generalized_vertex(const LabelledGraph& g, VertexId v, std::size_t level) {
  return level_partition(g, level).class_of(v);
}

}  // namespace lgraph
