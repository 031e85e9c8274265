#ifndef LGRAPH_GRAPH_IO_HPP
#define LGRAPH_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "lgraph/graph.hpp"

namespace lgraph {

/// Reads the line-oriented graph DSL:
///
///   # comment
///   edge <src> <dst> <label>
///
/// Tokens are separated by whitespace, vertices are declared implicitly and
/// numbered in order of first appearance. Throws ParseError (with the line
/// number) on malformed lines or an input with no edges, and SinkError when a
/// vertex has no outgoing edge.
LabelledGraph parse_graph(std::string_view text, bool strict = false);

/// Reads a file through parse_graph. Throws Error when the file cannot be read.
LabelledGraph load_graph(const std::string& path, bool strict = false);

/// Emits the DSL form; parse_graph(emit_dsl(g)) reproduces g.
std::string emit_dsl(const LabelledGraph& g);

/// Graphviz digraph with edge labels.
std::string to_dot(const LabelledGraph& g, std::string_view name = "E");

/// {"vertices": [...], "edges": [{"src": ..., "dst": ..., "label": ...}, ...]}
std::string to_json(const LabelledGraph& g);

/// Escapes a string for use inside a double-quoted DOT identifier.
std::string dot_quote(std::string_view s);

}  // namespace lgraph

#endif  // LGRAPH_GRAPH_IO_HPP
