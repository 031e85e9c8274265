#include "lgraph/merged.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include "lgraph/accommodating.hpp"
#include "lgraph/partition.hpp"

namespace lgraph {

namespace {

std::string class_name(const LabelledGraph& g, VertexSet c) {
  if (c.size() == 1) return g.vertex_name(c.front());
  std::string out = "[";
  bool first = true;
  c.for_each([&](VertexId v) {
    if (!first) out.push_back(',');
    out += g.vertex_name(v);
    first = false;
  });
  out.push_back(']');
  return out;
}

using Step = std::function<VertexSet(const LabelledGraph&, VertexSet, SymbolId)>;

VertexSet forward(const LabelledGraph& g, VertexSet s, SymbolId a) { return g.step(s, a); }
VertexSet backward(const LabelledGraph& g, VertexSet s, SymbolId a) { return g.step_back(s, a); }

/// Explores every pair (X_E(alpha), X_F(alpha)) reachable from `start` by words
/// of length >= 1 and returns the first pair violating `ok`, with its word.
struct PairViolation {
  VertexSet e;
  VertexSet f;
  std::vector<SymbolId> word;
};

std::optional<PairViolation> explore_pairs(
    const LabelledGraph& g, const LabelledGraph& f, std::pair<VertexSet, VertexSet> start,
    const Step& step, const std::function<bool(VertexSet, VertexSet)>& ok) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<SymbolId>> seen;
  std::vector<std::pair<VertexSet, VertexSet>> queue;
  std::vector<std::vector<SymbolId>> words;
  queue.push_back(start);
  words.emplace_back();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (SymbolId a = 0; a < g.num_symbols(); ++a) {
      VertexSet nx = step(g, x, a);
      VertexSet ny = step(f, y, a);
      auto key = std::make_pair(nx.bits(), ny.bits());
      if (seen.contains(key)) continue;
      auto w = words[head];
      w.push_back(a);
      if (!ok(nx, ny)) return PairViolation{nx, ny, w};
      seen.emplace(key, w);
      queue.emplace_back(nx, ny);
      words.push_back(std::move(w));
    }
  }
  return std::nullopt;
}

}  // namespace

MergedLabelledGraph merge(const LabelledGraph& g) {
  const auto classes = stable_partition(g).partition.classes;
  std::vector<std::size_t> class_of(g.num_vertices());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    classes[i].for_each([&](VertexId v) { class_of[v] = i; });
  }
  std::vector<std::string> names;
  for (VertexSet c : classes) names.push_back(class_name(g, c));

  std::vector<EdgeSpec> specs;
  std::map<std::tuple<std::size_t, std::size_t, SymbolId>, std::size_t> edge_index;
  std::vector<std::size_t> edge_map;
  for (const auto& e : g.edges()) {
    auto key = std::make_tuple(class_of[e.src], class_of[e.dst], e.label);
    auto [it, inserted] = edge_index.try_emplace(key, specs.size());
    if (inserted) {
      specs.push_back({names[class_of[e.src]], names[class_of[e.dst]], g.symbol_name(e.label)});
    }
    edge_map.push_back(it->second);
  }
  MergedLabelledGraph m{LabelledGraph::from_edges(specs), {}, std::move(edge_map), {}};

  m.classes.assign(classes.size(), VertexSet{});
  std::vector<VertexId> merged_id(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    merged_id[i] = *m.merged.find_vertex(names[i]);
    m.classes[merged_id[i]] = classes[i];
  }
  m.vertex_map.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) m.vertex_map[v] = merged_id[class_of[v]];
  return m;
}

VertexSet lift_set(const MergedLabelledGraph& m, VertexSet merged_set) {
  VertexSet out;
  merged_set.for_each([&](VertexId u) { out |= m.classes[u]; });
  return out;
}

VertexSet project_set(const MergedLabelledGraph& m, VertexSet set) {
  VertexSet out;
  set.for_each([&](VertexId v) { out.insert(m.vertex_map[v]); });
  return out;
}

bool MergeReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; });
}

MergeReport verify_merge(const LabelledGraph& g, const MergedLabelledGraph& m) {
  const LabelledGraph& f = m.merged;
  MergeReport report;
  auto add = [&](std::string name, std::optional<std::string> failure) {
    report.clauses.push_back({std::move(name), !failure.has_value(), failure.value_or("")});
  };
  auto word_text = [&](const std::vector<SymbolId>& w) { return format_word(g, w); };
  auto lift = [&](VertexSet s) { return lift_set(m, s); };
  auto project = [&](VertexSet s) { return project_set(m, s); };

  {
    std::optional<std::string> failure;
    for (VertexId u = 0; u < f.num_vertices() && !failure; ++u) {
      auto bad = explore_pairs(g, f, {m.classes[u], VertexSet::singleton(u)}, forward,
                               [&](VertexSet x, VertexSet y) { return x == lift(y); });
      if (bad) {
        failure = "from class " + format_set(g, m.classes[u]) + " along " + word_text(bad->word);
      }
    }
    add("language transport L([u]E^k v) = L_F([u]F^k[v])", failure);
  }

  {
    std::optional<std::string> failure;
    auto bad = explore_pairs(g, f, {g.all_vertices(), f.all_vertices()}, forward,
                             [&](VertexSet x, VertexSet y) { return x == lift(y) && project(x) == y; });
    if (bad) failure = "r(" + word_text(bad->word) + ") = " + format_set(g, bad->e);
    add("(i) r(alpha) = hat(r_F(alpha)), [r(alpha)] = r_F(alpha)", failure);
  }

  {
    std::optional<std::string> failure;
    auto bad = explore_pairs(g, f, {g.all_vertices(), f.all_vertices()}, backward,
                             [&](VertexSet x, VertexSet y) {
                               return x.subset_of(lift(y)) && project(x) == y;
                             });
    if (bad) {
      auto w = bad->word;
      std::reverse(w.begin(), w.end());
      failure = "s(" + word_text(w) + ") = " + format_set(g, bad->e);
    }
    add("(ii) s(alpha) within hat(s_F(alpha)), [s(alpha)] = s_F(alpha)", failure);
  }

  {
    std::optional<std::string> failure;
    PartitionTower te(g);
    PartitionTower tf(f);
    const std::size_t depth = std::max(te.stabilization_depth(), tf.stabilization_depth()) + 1;
    for (std::size_t l = 1; l <= depth && !failure; ++l) {
      auto pe = te.at(l);
      auto pf = tf.at(l);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (project(pe.class_of(v)) != pf.class_of(m.vertex_map[v])) {
          failure = "vertex " + g.vertex_name(v) + " at level " + std::to_string(l);
          break;
        }
      }
    }
    add("(iii) [[v]_l]_inf = [[v]_inf]_l", failure);
  }

  const AccommodatingSet ebar = bar_accommodating(g);
  const AccommodatingSet fbar = bar_accommodating(f);
  const std::vector<VertexSet> probe = ebar.size() <= 256    ? ebar.members()
                                       : ebar.atoms()         ? *ebar.atoms()
                                                              : ebar.members();
  {
    std::optional<std::string> failure;
    for (std::size_t i = 0; i < probe.size() && !failure; ++i) {
      for (std::size_t j = i + 1; j < probe.size(); ++j) {
        if (project(probe[i] & probe[j]) != (project(probe[i]) & project(probe[j]))) {
          failure = format_set(g, probe[i]) + " and " + format_set(g, probe[j]);
          break;
        }
      }
    }
    add("(iv) [A n B]_inf = [A]_inf n [B]_inf on E-bar", failure);
  }

  {
    std::optional<std::string> failure;
    for (VertexSet a : probe) {
      if (lift(project(a)) != a) {
        failure = format_set(g, a);
        break;
      }
    }
    add("(v) A = hat([A]_inf) on E-bar", failure);
  }

  {
    std::optional<std::string> failure;
    if (ebar.size() != fbar.size()) {
      failure = "|E-bar| = " + std::to_string(ebar.size()) + ", |F-bar| = " + std::to_string(fbar.size());
    } else {
      std::unordered_set<VertexSet> images;
      for (VertexSet a : probe) {
        VertexSet img = project(a);
        if (!fbar.contains(img) || !images.insert(img).second) {
          failure = "image of " + format_set(g, a);
          break;
        }
      }
      for (VertexSet a : probe) {
        if (failure) break;
        auto bad = explore_pairs(g, f, {a, project(a)}, forward,
                                 [&](VertexSet x, VertexSet y) { return project(x) == y; });
        if (bad) failure = "r(" + format_set(g, a) + ", " + word_text(bad->word) + ")";
      }
    }
    add("bijection E-bar -> F-bar with [r(A,alpha)]_inf = r_F([A]_inf,alpha)", failure);
  }

  {
    std::optional<std::string> failure;
    for (VertexId u = 0; u < f.num_vertices(); ++u) {
      if (!fbar.contains(VertexSet::singleton(u))) {
        failure = "{" + f.vertex_name(u) + "} not in F-bar";
        break;
      }
    }
    add("singleton property {[v]_inf} in F-bar", failure);
  }

  {
    std::optional<std::string> failure;
    for (VertexSet a : probe) {
      if (labels_out(g, a) != labels_out(f, project(a)) || labels_in(g, a) != labels_in(f, project(a))) {
        failure = format_set(g, a);
        break;
      }
    }
    add("label sets L(AE^1) = L_F([A]F^1), L(E^1A) = L_F(F^1[A])", failure);
  }

  {
    std::optional<std::string> failure;
    const bool e_wlr = is_weakly_left_resolving(ebar).holds;
    const bool f_wlr = is_weakly_left_resolving(fbar).holds;
    if (e_wlr && !f_wlr) failure = "E-bar is weakly left-resolving but F-bar is not";
    if (!e_wlr) failure = "E-bar is not weakly left-resolving (hypothesis violated upstream)";
    if (is_set_finite(ebar) != is_set_finite(fbar) ||
        is_receiver_set_finite(ebar) != is_receiver_set_finite(fbar)) {
      failure = "set-finiteness differs";
    }
    add("F-bar weakly left-resolving and set-finite like E-bar", failure);
  }
  return report;
}

}  // namespace lgraph
