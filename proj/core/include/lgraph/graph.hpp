#ifndef LGRAPH_GRAPH_HPP
#define LGRAPH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lgraph/vertex_set.hpp"

namespace lgraph {

using SymbolId = std::uint32_t;

struct Edge {
  VertexId src;
  VertexId dst;
  SymbolId label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A nonempty finite sequence of alphabet symbols (a labelled path label).
class Word {
 public:
  /// Throws std::invalid_argument on an empty sequence.
  explicit Word(std::vector<SymbolId> symbols);
  Word(std::initializer_list<SymbolId> symbols)
      : Word(std::vector<SymbolId>(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  SymbolId operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const SymbolId> symbols() const noexcept { return symbols_; }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<SymbolId> symbols_;
};

/// A raw edge triple as it appears in the DSL.
struct EdgeSpec {
  std::string src;
  std::string dst;
  std::string label;
};

/// A finite directed graph without sinks together with a surjective labelling
/// of its edges. Immutable after construction.
///
/// Vertices are numbered in order of first appearance in the edge list; the
/// alphabet is the set of used labels in lexicographic order, so symbol ids
/// follow that order.
class LabelledGraph {
 public:
  /// Builds a graph from edge triples. Parallel edges that carry the same label
  /// are collapsed and reported through `warnings()` unless `strict` is set, in
  /// which case they raise ParseError. Throws SinkError when some vertex has no
  /// outgoing edge and ParseError when the list is empty or exceeds
  /// kMaxVertices vertices.
  static LabelledGraph from_edges(std::span<const EdgeSpec> edges, bool strict = false);

  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& symbol_name(SymbolId a) const { return alphabet_.at(a); }
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  /// Edges in input order, after collapsing duplicates.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  VertexSet all_vertices() const noexcept { return VertexSet::prefix(num_vertices()); }

  /// Targets of a-labelled edges leaving v.
  VertexSet successors(VertexId v, SymbolId a) const noexcept {
    return succ_[v * num_symbols() + a];
  }
  /// Sources of a-labelled edges entering v.
  VertexSet predecessors(VertexId v, SymbolId a) const noexcept {
    return pred_[v * num_symbols() + a];
  }

  /// r(A, a)
  VertexSet step(VertexSet from, SymbolId a) const noexcept;
  /// {v : r({v}, a) meets `to`}
  VertexSet step_back(VertexSet to, SymbolId a) const noexcept;

  /// True when every alphabet symbol labels some edge. Always holds for graphs
  /// built by from_edges; kept as an explicit check of the invariant.
  bool labelling_is_onto() const;

 private:
  LabelledGraph() = default;

  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<std::string> alphabet_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> succ_;
  std::vector<VertexSet> pred_;
  std::vector<std::string> warnings_;
};

/// r(A, alpha), computed letter by letter through r(A, alpha a) = r(r(A, alpha), a).
/// An empty word leaves A unchanged.
VertexSet relative_range(const LabelledGraph& g, VertexSet from,
                         std::span<const SymbolId> word) noexcept;

/// r(alpha) = r(E^0, alpha)
VertexSet range_of_word(const LabelledGraph& g, const Word& word) noexcept;
/// s(alpha): sources of paths labelled alpha.
VertexSet source_of_word(const LabelledGraph& g, const Word& word) noexcept;

/// L(A E^1)
std::vector<SymbolId> labels_out(const LabelledGraph& g, VertexSet a);
/// L(E^1 A)
std::vector<SymbolId> labels_in(const LabelledGraph& g, VertexSet a);

/// Result of a word query whose tokens may name unknown symbols. Unknown
/// symbols make the result empty; they are listed rather than rejected.
struct WordQuery {
  VertexSet result;
  std::vector<std::string> unknown_symbols;
};

/// Splits word text into symbol tokens. Tokens are separated by '.' or
/// whitespace when present; otherwise, if every alphabet symbol is a single
/// character, the text is read one character per symbol; otherwise the whole
/// text is one symbol.
std::vector<std::string> split_word_text(const LabelledGraph& g, std::string_view text);

/// Resolves tokens to a Word, or nullopt (with `unknown` filled) when some
/// token is not in the alphabet or the token list is empty.
std::optional<Word> resolve_word(const LabelledGraph& g, std::span<const std::string> tokens,
                                 std::vector<std::string>* unknown = nullptr);

WordQuery query_range(const LabelledGraph& g, std::string_view word_text);
WordQuery query_source(const LabelledGraph& g, std::string_view word_text);

/// Symbols joined directly when every alphabet symbol is one character,
/// otherwise joined with '.'.
std::string format_word(const LabelledGraph& g, std::span<const SymbolId> word);
/// "{v1,v2}" in vertex order.
std::string format_set(const LabelledGraph& g, VertexSet s);
/// Parses "v1,v2" or "{v1,v2}"; "{}" and "" give the empty set. Throws
/// ParseError on unknown vertices.
VertexSet parse_set(const LabelledGraph& g, std::string_view text);

}  // namespace lgraph

#endif  // LGRAPH_GRAPH_HPP
