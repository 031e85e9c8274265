#include "lgraph/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lgraph/accommodating.hpp"
#include "lgraph/error.hpp"
#include "lgraph/partition.hpp"

namespace lgraph {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* to_string(Simplicity s) noexcept {
  switch (s) {
    case Simplicity::simple: return "SIMPLE";
    case Simplicity::not_simple: return "NOT SIMPLE";
    case Simplicity::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::size_t smallest_period(std::span<const SymbolId> word) {
  const std::size_t n = word.size();
  if (n == 0) throw std::invalid_argument("smallest_period: empty word");
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && word[i] != word[k]) k = border[k - 1];
    if (word[i] == word[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

bool is_agreeable(std::span<const SymbolId> word, std::size_t bound) {
  if (word.size() < 2 || bound == 0) return false;
  return smallest_period(word) <= std::min(bound, word.size() - 1);
}

PeriodState::PeriodState(std::size_t bound) : bound_(bound) {
  if (bound == 0 || bound > kMaxPeriodBound)
    throw std::invalid_argument("PeriodState: bound must be in 1.." +
                                std::to_string(kMaxPeriodBound));
  full_ = ((std::uint64_t{1} << (bound + 1)) - 1) & ~std::uint64_t{1};
  window_.reserve(bound);
}

void PeriodState::push(SymbolId a) {
  const std::size_t w = window_.size();
  for (std::size_t p = 1; p <= bound_ && p <= length_; ++p) {
    if (window_[w - p] != a) failed_ |= std::uint64_t{1} << p;
  }
  if (w == bound_) window_.erase(window_.begin());
  window_.push_back(a);
  ++length_;
}

namespace {

std::string state_key(VertexSet s, const PeriodState& ps) {
  std::string key;
  const auto bits = s.bits();
  const auto mask = ps.failed_mask();
  key.append(reinterpret_cast<const char*>(&bits), sizeof bits);
  key.append(reinterpret_cast<const char*>(&mask), sizeof mask);
  for (SymbolId a : ps.window()) key.append(reinterpret_cast<const char*>(&a), sizeof a);
  return key;
}

std::vector<SymbolId> primitive_root(const std::vector<SymbolId>& w) {
  const std::size_t p = smallest_period(w);
  if (w.size() % p == 0) return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)};
  return w;
}

bool is_suffix_of_power(const std::vector<SymbolId>& pi, const std::vector<SymbolId>& rho) {
  const std::size_t m = rho.size();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    std::size_t back = pi.size() - i;  // distance from the end
    if (pi[i] != rho[(m - back % m) % m]) return false;
  }
  return true;
}

std::vector<SymbolId> concat(const std::vector<SymbolId>& a, const std::vector<SymbolId>& b) {
  std::vector<SymbolId> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Strongly connected component id per vertex, and whether the component has an internal edge.
struct Components {
  std::vector<int> id;
  std::vector<bool> cyclic;
};

Components strongly_connected(const LabelledGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> out(n);
  for (const Edge& e : g.edges()) out[e.src].insert(e.dst);
  std::vector<VertexSet> reach(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexSet r = out[v];
    VertexSet frontier = r;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](VertexId u) { next = next | out[u]; });
      frontier = next - r;
      r = r | next;
    }
    reach[v] = r;
  }
  Components c{std::vector<int>(n, -1), {}};
  int next_id = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (c.id[v] >= 0) continue;
    c.cyclic.push_back(reach[v].contains(v));
    for (VertexId u = v; u < n; ++u) {
      if (u == v || (reach[v].contains(u) && reach[u].contains(v))) c.id[u] = next_id;
    }
    ++next_id;
  }
  return c;
}

// Shortest label path from `from` to `to` using only vertices of component `comp`.
std::optional<std::vector<SymbolId>> path_within(const LabelledGraph& g, const Components& c,
                                                 VertexId from, VertexId to) {
  if (from == to) return std::vector<SymbolId>{};
  const std::size_t n = g.num_vertices();
  std::vector<std::optional<Edge>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Edge& e : g.edges()) {
      if (e.src != v || seen[e.dst] || c.id[e.dst] != c.id[from]) continue;
      seen[e.dst] = true;
      parent[e.dst] = e;
      if (e.dst == to) {
        std::vector<SymbolId> word;
        for (VertexId u = to; u != from; u = parent[u]->src) word.push_back(parent[u]->label);
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(e.dst);
    }
  }
  return std::nullopt;
}

}  // namespace

LevelDisagreeable is_disagreeable_class(const LabelledGraph& g, VertexSet cls, std::size_t bound) {
  struct Node {
    VertexSet set;
    PeriodState period;
    std::size_t parent;
    SymbolId symbol;
  };
  LevelDisagreeable result;
  if (cls.empty()) return result;
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({cls, PeriodState(bound), 0, 0});
  seen.insert(state_key(cls, nodes.front().period));
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (SymbolId a = 0; a < g.num_symbols(); ++a) {
      VertexSet next = g.step(nodes[head].set, a);
      if (next.empty()) continue;
      PeriodState ps = nodes[head].period;
      ps.push(a);
      if (!seen.insert(state_key(next, ps)).second) continue;
      nodes.push_back({next, ps, head, a});
      if (ps.all_failed()) {
        std::vector<SymbolId> word;
        for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent)
          word.push_back(nodes[i].symbol);
        std::reverse(word.begin(), word.end());
        result.disagreeable = true;
        result.witness = Word(std::move(word));
        result.states_explored = nodes.size();
        return result;
      }
    }
  }
  result.states_explored = nodes.size();
  return result;
}

std::optional<DisagreeableCertificate> find_disagreeable_certificate(const LabelledGraph& g,
                                                                     VertexSet cls) {
  const std::size_t n = g.num_vertices();
  // Shortest label path from the class to every reachable vertex.
  std::vector<std::optional<std::vector<SymbolId>>> prefix(n);
  std::deque<VertexId> queue;
  cls.for_each([&](VertexId v) {
    prefix[v] = std::vector<SymbolId>{};
    queue.push_back(v);
  });
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Edge& e : g.edges()) {
      if (e.src != v || prefix[e.dst]) continue;
      prefix[e.dst] = *prefix[v];
      prefix[e.dst]->push_back(e.label);
      queue.push_back(e.dst);
    }
  }
  const Components comps = strongly_connected(g);

  for (VertexId u = 0; u < n; ++u) {
    if (!prefix[u] || !comps.cyclic[comps.id[u]]) continue;
    std::vector<std::vector<SymbolId>> cycles;
    for (const Edge& e : g.edges()) {
      if (e.src != u || comps.id[e.dst] != comps.id[u]) continue;
      auto back = path_within(g, comps, e.dst, u);
      if (!back) continue;
      std::vector<SymbolId> cyc{e.label};
      cyc.insert(cyc.end(), back->begin(), back->end());
      cycles.push_back(std::move(cyc));
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (concat(cycles[i], cycles[j]) != concat(cycles[j], cycles[i])) {
          return DisagreeableCertificate{DisagreeableCertificate::Kind::branching, u, *prefix[u],
                                         cycles[i], cycles[j]};
        }
      }
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    if (!prefix[u] || !comps.cyclic[comps.id[u]]) continue;
    std::vector<SymbolId> rho;
    for (const Edge& e : g.edges()) {
      if (e.src != u || comps.id[e.dst] != comps.id[u]) continue;
      auto back = path_within(g, comps, e.dst, u);
      if (!back) continue;
      rho = {e.label};
      rho.insert(rho.end(), back->begin(), back->end());
      break;
    }
    if (rho.empty()) continue;
    const std::vector<SymbolId> root = primitive_root(rho);
    // Candidate lead-ins: the shortest path, and every path through a reachable in-edge.
    std::vector<std::vector<SymbolId>> leads{*prefix[u]};
    for (const Edge& e : g.edges()) {
      if (e.dst != u || !prefix[e.src]) continue;
      leads.push_back(concat(*prefix[e.src], {e.label}));
    }
    for (const auto& pi : leads) {
      if (!pi.empty() && !is_suffix_of_power(pi, root)) {
        return DisagreeableCertificate{DisagreeableCertificate::Kind::lasso, u, pi, root, {}};
      }
    }
  }
  return std::nullopt;
}

std::vector<SymbolId> certificate_word(const DisagreeableCertificate& cert, std::size_t bound) {
  std::vector<SymbolId> word = cert.prefix;
  if (cert.kind == DisagreeableCertificate::Kind::branching) {
    // sigma^M tau sigma^M with M |sigma| >= bound + |sigma| + |tau|
    const std::size_t s = cert.cycle.size();
    const std::size_t m = (bound + s + cert.other.size()) / s + 1;
    for (std::size_t i = 0; i < m; ++i) word.insert(word.end(), cert.cycle.begin(), cert.cycle.end());
    word.insert(word.end(), cert.other.begin(), cert.other.end());
    for (std::size_t i = 0; i < m; ++i) word.insert(word.end(), cert.cycle.begin(), cert.cycle.end());
  } else {
    const std::size_t r = cert.cycle.size();
    const std::size_t m = (bound + r) / r + 2;
    for (std::size_t i = 0; i < m; ++i) word.insert(word.end(), cert.cycle.begin(), cert.cycle.end());
  }
  return word;
}

DisagreeableReport is_disagreeable(const LabelledGraph& g, std::size_t lmax) {
  if (lmax == 0 || lmax > kMaxPeriodBound)
    throw std::invalid_argument("lmax must be in 1.." + std::to_string(kMaxPeriodBound));
  DisagreeableReport report;
  report.lmax = lmax;
  PartitionTower tower(g);
  report.stabilization_depth = tower.stabilization_depth();

  const std::size_t top = std::max(lmax, report.stabilization_depth);
  std::vector<VertexSet> listed;
  for (std::size_t l = 1; l <= top; ++l) {
    for (VertexSet c : tower.at(l).classes) {
      if (std::find(listed.begin(), listed.end(), c) == listed.end()) {
        listed.push_back(c);
        report.classes.push_back({c, l, std::nullopt});
      }
      if (l <= lmax && !report.refuting_class) {
        if (!is_disagreeable_class(g, c, l).disagreeable) {
          report.refuting_class = c;
          report.refuting_level = l;
        }
      }
    }
  }
  if (report.refuting_class) {
    report.verdict = Verdict::refuted;
    report.note = "no long non-agreeable words from " + format_set(g, *report.refuting_class) +
                  " at level " + std::to_string(report.refuting_level);
    return report;
  }
  bool all = true;
  for (auto& ev : report.classes) {
    ev.certificate = find_disagreeable_certificate(g, ev.cls);
    if (!ev.certificate) all = false;
  }
  if (all) {
    report.verdict = Verdict::confirmed;
    report.note = "every generalized vertex carries a certificate";
  } else {
    report.verdict = Verdict::unknown;
    report.note = "no refutation for levels up to " + std::to_string(lmax) +
                  "; some generalized vertex has no certificate";
  }
  return report;
}

VertexSet label_reachable(const LabelledGraph& g, VertexSet cls) {
  VertexSet r;
  for (SymbolId a = 0; a < g.num_symbols(); ++a) r = r | g.step(cls, a);
  for (;;) {
    VertexSet next = r;
    for (SymbolId a = 0; a < g.num_symbols(); ++a) next = next | g.step(r, a);
    if (next == r) return r;
    r = next;
  }
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

using PairState = std::pair<std::uint64_t, std::uint64_t>;

// Depth-first search for a cycle of bad states; colours are shared across start vertices.
class BadCycleSearch {
 public:
  BadCycleSearch(const LabelledGraph& g, VertexSet target) : g_(g), target_(target) {}

  bool bad(VertexSet s, VertexSet t) const { return !s.empty() && !t.subset_of(target_); }

  // Returns the label path from the start to the cycle entry and the cycle labels.
  std::optional<std::pair<std::vector<SymbolId>, std::vector<SymbolId>>> run(VertexSet s0,
                                                                            VertexSet t0) {
    struct Frame {
      PairState state;
      SymbolId next_symbol;
      SymbolId via;
    };
    const PairState start{s0.bits(), t0.bits()};
    if (colour_.count(start) && colour_[start] == 2) return std::nullopt;
    std::vector<Frame> stack{{start, 0, 0}};
    const bool start_bad = bad(s0, t0);
    colour_[start] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_symbol == g_.num_symbols()) {
        colour_[f.state] = 2;
        stack.pop_back();
        continue;
      }
      const SymbolId a = f.next_symbol++;
      const VertexSet s = g_.step(VertexSet::from_bits(f.state.first), a);
      const VertexSet t = g_.step(VertexSet::from_bits(f.state.second), a);
      ++explored_;
      if (!bad(s, t)) continue;
      const PairState ns{s.bits(), t.bits()};
      auto it = colour_.find(ns);
      const int c = it == colour_.end() ? 0 : it->second;
      if (c == 2) continue;
      if (c == 1) {
        // Back edge: the cycle is the stack segment from ns to here plus a.
        std::size_t k = 0;
        while (stack[k].state != ns) ++k;
        if (k == 0 && !start_bad) {
          // The start state is not bad, so it cannot lie on the cycle.
          continue;
        }
        std::vector<SymbolId> prefix, cycle;
        for (std::size_t i = 1; i <= k; ++i) prefix.push_back(stack[i].via);
        for (std::size_t i = k + 1; i < stack.size(); ++i) cycle.push_back(stack[i].via);
        cycle.push_back(a);
        return std::make_pair(prefix, cycle);
      }
      colour_[ns] = 1;
      stack.push_back({ns, 0, a});
    }
    return std::nullopt;
  }

  std::size_t explored() const noexcept { return explored_; }

 private:
  const LabelledGraph& g_;
  VertexSet target_;
  std::unordered_map<PairState, int, PairHash> colour_;
  std::size_t explored_ = 0;
};

}  // namespace

CofinalityReport is_strongly_cofinal(const LabelledGraph& g) {
  const AccommodatingSet bar = bar_accommodating(g);
  const WlrResult wlr = is_weakly_left_resolving(bar);
  if (!wlr.holds) throw PreconditionError("the complement-closed accommodating set is not weakly left-resolving");

  CofinalityReport report;
  PartitionTower tower(g);
  const LevelPartition level1 = tower.at(1);
  std::vector<std::pair<VertexSet, std::size_t>> targets;
  for (std::size_t l = 1; l <= tower.stabilization_depth(); ++l) {
    for (VertexSet c : tower.at(l).classes) {
      bool dup = false;
      for (const auto& t : targets) dup = dup || t.first == c;
      if (!dup) targets.emplace_back(c, l);
    }
  }
  for (const auto& [cls, level] : targets) {
    const VertexSet reach = label_reachable(g, cls);
    BadCycleSearch search(g, reach);
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      auto found = search.run(VertexSet::singleton(w), level1.class_of(w));
      if (found) {
        report.states_explored += search.explored();
        CofinalityWitness wit{w, cls, level, std::move(found->first), std::move(found->second)};
        if (!validate_cofinality_witness(g, wit))
          throw std::logic_error("cofinality witness failed re-validation");
        report.verdict = Verdict::refuted;
        report.witness = std::move(wit);
        return report;
      }
    }
    report.states_explored += search.explored();
  }
  report.verdict = Verdict::confirmed;
  return report;
}

bool validate_cofinality_witness(const LabelledGraph& g, const CofinalityWitness& w) {
  if (w.cycle.empty() || w.start >= g.num_vertices()) return false;
  const VertexSet reach = label_reachable(g, w.target);
  VertexSet s = VertexSet::singleton(w.start);
  VertexSet t = generalized_vertex(g, w.start, 1);
  auto advance = [&](SymbolId a) {
    s = g.step(s, a);
    t = g.step(t, a);
    return !s.empty() && !t.subset_of(reach);
  };
  for (SymbolId a : w.prefix) {
    if (a >= g.num_symbols() || !advance(a)) return false;
  }
  std::unordered_set<PairState, PairHash> seen;
  while (seen.insert({s.bits(), t.bits()}).second) {
    for (SymbolId a : w.cycle) {
      if (a >= g.num_symbols() || !advance(a)) return false;
    }
  }
  return true;
}

SimplicityVerdict is_simple(const LabelledGraph& g, std::size_t lmax) {
  SimplicityVerdict v;
  v.cofinality = is_strongly_cofinal(g);
  v.disagreeable = is_disagreeable(g, lmax);
  if (v.cofinality.verdict == Verdict::refuted || v.disagreeable.verdict == Verdict::refuted)
    v.verdict = Simplicity::not_simple;
  else if (v.disagreeable.verdict == Verdict::unknown)
    v.verdict = Simplicity::unknown;
  else
    v.verdict = Simplicity::simple;
  return v;
}

}  // namespace lgraph
