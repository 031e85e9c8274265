#ifndef LGRAPH_MERGED_HPP
#define LGRAPH_MERGED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lgraph/graph.hpp"

namespace lgraph {

/// The merged labelled graph (F, L_F): vertices are the ~_inf classes of E, and
/// every edge of E becomes an edge between the classes of its endpoints, with
/// edges of equal label between the same classes identified.
struct MergedLabelledGraph {
  LabelledGraph merged;
  /// E^0 -> F^0
  std::vector<VertexId> vertex_map;
  /// E^1 -> F^1, indices into merged.edges()
  std::vector<std::size_t> edge_map;
  /// classes[i] is the ~_inf class of E that became vertex i of F.
  std::vector<VertexSet> classes;
};

/// Vertex names of F are the class members joined as "[v1,v2]"; singleton
/// classes keep the original name.
MergedLabelledGraph merge(const LabelledGraph& g);

/// B-hat = {v : [v]_inf in B}
VertexSet lift_set(const MergedLabelledGraph& m, VertexSet merged_set);
/// [A]_inf = {[v]_inf : v in A}
VertexSet project_set(const MergedLabelledGraph& m, VertexSet set);

struct ClauseResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct MergeReport {
  std::vector<ClauseResult> clauses;
  bool all_pass() const;
};

/// Checks the transport identities between (E, L, E-bar) and its merged space:
/// language and range/source transport, [[v]_l]_inf = [[v]_inf]_l, intersection
/// transport and hat round trip on E-bar, the bijection E-bar -> F-bar with
/// relative-range equivariance, the singleton property {[v]_inf} in F-bar,
/// label-set transport, and weak left-resolvingness of F-bar. Word-indexed
/// clauses are checked over all words by exploring the reachable pairs of
/// range sets. Failures are reported, not thrown.
MergeReport verify_merge(const LabelledGraph& g, const MergedLabelledGraph& m);

}  // namespace lgraph

#endif  // LGRAPH_MERGED_HPP
