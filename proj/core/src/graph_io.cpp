#include "lgraph/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "lgraph/error.hpp"

namespace lgraph {

LabelledGraph parse_graph(std::string_view text, bool strict) {
  std::vector<EdgeSpec> specs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head.front() == '#') continue;
    if (head != "edge") throw ParseError(lineno, "expected 'edge', found '" + head + "'");
    EdgeSpec e;
    if (!(fields >> e.src >> e.dst >> e.label)) {
      throw ParseError(lineno, "edge needs <src> <dst> <label>");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    specs.push_back(std::move(e));
  }
  if (specs.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "no edges in input");
  return LabelledGraph::from_edges(specs, strict);
}

LabelledGraph load_graph(const std::string& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), strict);
}

std::string emit_dsl(const LabelledGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += "edge " + g.vertex_name(e.src) + ' ' + g.vertex_name(e.dst) + ' ' +
           g.symbol_name(e.label) + '\n';
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string to_dot(const LabelledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (const auto& v : g.vertex_names()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(g.vertex_name(e.src)) << " -> " << dot_quote(g.vertex_name(e.dst))
        << " [label=" << dot_quote(g.symbol_name(e.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const LabelledGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_names();
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"src", g.vertex_name(e.src)},
                     {"dst", g.vertex_name(e.dst)},
                     {"label", g.symbol_name(e.label)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace lgraph
