#include "lgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "lgraph/error.hpp"

namespace lgraph {

Word::Word(std::vector<SymbolId> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("a word has at least one symbol");
}

LabelledGraph LabelledGraph::from_edges(std::span<const EdgeSpec> specs, bool strict) {
  if (specs.empty()) throw ParseError(0, "graph has no edges");

  LabelledGraph g;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = g.vertex_index_.try_emplace(name, static_cast<VertexId>(g.vertex_names_.size()));
    if (inserted) {
      if (g.vertex_names_.size() == kMaxVertices) {
        throw ParseError(0, "more than " + std::to_string(kMaxVertices) + " vertices");
      }
      g.vertex_names_.push_back(name);
    }
    return it->second;
  };

  std::set<std::string> labels;
  for (const auto& e : specs) labels.insert(e.label);
  g.alphabet_.assign(labels.begin(), labels.end());
  std::map<std::string, SymbolId, std::less<>> symbol_of;
  for (SymbolId a = 0; a < g.alphabet_.size(); ++a) symbol_of.emplace(g.alphabet_[a], a);

  std::set<std::tuple<VertexId, VertexId, SymbolId>> seen;
  for (const auto& e : specs) {
    VertexId s = intern(e.src);
    VertexId t = intern(e.dst);
    SymbolId a = symbol_of.find(e.label)->second;
    if (!seen.emplace(s, t, a).second) {
      std::string msg = "duplicate edge " + e.src + " -> " + e.dst + " labelled " + e.label;
      if (strict) throw ParseError(0, msg);
      g.warnings_.push_back(msg + " collapsed");
      continue;
    }
    g.edges_.push_back({s, t, a});
  }

  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_symbols();
  g.succ_.assign(n * k, VertexSet{});
  g.pred_.assign(n * k, VertexSet{});
  std::vector<bool> has_out(n, false);
  for (const auto& e : g.edges_) {
    g.succ_[e.src * k + e.label].insert(e.dst);
    g.pred_[e.dst * k + e.label].insert(e.src);
    has_out[e.src] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!has_out[v]) throw SinkError(g.vertex_names_[v]);
  }
  return g;
}

std::optional<VertexId> LabelledGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> LabelledGraph::find_symbol(std::string_view name) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end() || *it != name) return std::nullopt;
  return static_cast<SymbolId>(it - alphabet_.begin());
}

VertexSet LabelledGraph::step(VertexSet from, SymbolId a) const noexcept {
  VertexSet out;
  const std::size_t k = num_symbols();
  from.for_each([&](VertexId v) { out |= succ_[v * k + a]; });
  return out;
}

VertexSet LabelledGraph::step_back(VertexSet to, SymbolId a) const noexcept {
  VertexSet out;
  const std::size_t k = num_symbols();
  to.for_each([&](VertexId v) { out |= pred_[v * k + a]; });
  return out;
}

bool LabelledGraph::labelling_is_onto() const {
  std::vector<bool> used(num_symbols(), false);
  for (const auto& e : edges_) used[e.label] = true;
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

VertexSet relative_range(const LabelledGraph& g, VertexSet from,
                         std::span<const SymbolId> word) noexcept {
  for (SymbolId a : word) {
    if (from.empty()) break;
    from = g.step(from, a);
  }
  return from;
}

VertexSet range_of_word(const LabelledGraph& g, const Word& word) noexcept {
  return relative_range(g, g.all_vertices(), word.symbols());
}

VertexSet source_of_word(const LabelledGraph& g, const Word& word) noexcept {
  VertexSet back = g.all_vertices();
  for (std::size_t i = word.size(); i-- > 0;) back = g.step_back(back, word[i]);
  return back;
}

std::vector<SymbolId> labels_out(const LabelledGraph& g, VertexSet a) {
  std::vector<SymbolId> out;
  for (SymbolId s = 0; s < g.num_symbols(); ++s) {
    if (!g.step(a, s).empty()) out.push_back(s);
  }
  return out;
}

std::vector<SymbolId> labels_in(const LabelledGraph& g, VertexSet a) {
  std::vector<SymbolId> out;
  for (SymbolId s = 0; s < g.num_symbols(); ++s) {
    if (!g.step_back(a, s).empty()) out.push_back(s);
  }
  return out;
}

namespace {

bool single_char_alphabet(const LabelledGraph& g) {
  return std::all_of(g.alphabet().begin(), g.alphabet().end(),
                     [](const std::string& s) { return s.size() == 1; });
}

}  // namespace

std::vector<std::string> split_word_text(const LabelledGraph& g, std::string_view text) {
  std::vector<std::string> tokens;
  const bool has_sep = text.find_first_of(". \t") != std::string_view::npos;
  if (has_sep) {
    std::string cur;
    for (char c : text) {
      if (c == '.' || c == ' ' || c == '\t') {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  } else if (single_char_alphabet(g)) {
    for (char c : text) tokens.emplace_back(1, c);
  } else if (!text.empty()) {
    tokens.emplace_back(text);
  }
  return tokens;
}

std::optional<Word> resolve_word(const LabelledGraph& g, std::span<const std::string> tokens,
                                 std::vector<std::string>* unknown) {
  std::vector<SymbolId> out;
  bool ok = !tokens.empty();
  for (const auto& t : tokens) {
    if (auto a = g.find_symbol(t)) {
      out.push_back(*a);
    } else {
      ok = false;
      if (unknown != nullptr) unknown->push_back(t);
    }
  }
  if (!ok) return std::nullopt;
  return Word(std::move(out));
}

WordQuery query_range(const LabelledGraph& g, std::string_view word_text) {
  WordQuery q;
  auto tokens = split_word_text(g, word_text);
  if (auto w = resolve_word(g, tokens, &q.unknown_symbols)) q.result = range_of_word(g, *w);
  return q;
}

WordQuery query_source(const LabelledGraph& g, std::string_view word_text) {
  WordQuery q;
  auto tokens = split_word_text(g, word_text);
  if (auto w = resolve_word(g, tokens, &q.unknown_symbols)) q.result = source_of_word(g, *w);
  return q;
}

std::string format_word(const LabelledGraph& g, std::span<const SymbolId> word) {
  const bool compact = single_char_alphabet(g);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out.push_back('.');
    out += g.symbol_name(word[i]);
  }
  return out;
}

std::string format_set(const LabelledGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out.push_back(',');
    out += g.vertex_name(v);
    first = false;
  });
  out.push_back('}');
  return out;
}

VertexSet parse_set(const LabelledGraph& g, std::string_view text) {
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  VertexSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (!tok.empty()) {
      auto v = g.find_vertex(tok);
      if (!v) throw ParseError(0, "unknown vertex '" + std::string(tok) + "'");
      out.insert(*v);
    }
    start = end + 1;
  }
  return out;
}

}  // namespace lgraph
