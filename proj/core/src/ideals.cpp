#include "lgraph/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "lgraph/error.hpp"
#include "lgraph/graph_io.hpp"

namespace lgraph {

namespace {

constexpr std::size_t kGeneratorListing = 256;

bool range_inside(const LabelledGraph& g, VertexSet a, VertexSet m) {
  for (SymbolId s = 0; s < g.num_symbols(); ++s) {
    if (!g.step(a, s).subset_of(m)) return false;
  }
  return true;
}

/// Largest member A of B with r(A,a) inside m for every letter a. Such
/// members are closed under unions because r(., a) distributes over them.
VertexSet largest_saturating(const AccommodatingSet& family, VertexSet m) {
  const auto& g = family.graph();
  VertexSet out;
  if (family.atoms()) {
    for (VertexSet atom : *family.atoms()) {
      if (range_inside(g, atom, m)) out |= atom;
    }
    return out;
  }
  for (VertexSet a : family.members()) {
    if (range_inside(g, a, m)) out |= a;
  }
  return out;
}

bool size_then_canonical(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return canonical_less(a, b);
}

void check_candidate(const AccommodatingSet& family, std::span<const VertexSet> candidate) {
  const auto& g = family.graph();
  for (VertexSet a : candidate) {
    if (!a.subset_of(g.all_vertices()))
      throw PreconditionError("candidate member uses a vertex outside the graph");
    if (!family.contains(a))
      throw PreconditionError("candidate member " + format_set(g, a) + " is not in the family");
  }
}

}  // namespace

PredicateResult is_hereditary(const AccommodatingSet& family, std::span<const VertexSet> candidate) {
  const auto& g = family.graph();
  std::unordered_set<VertexSet> h(candidate.begin(), candidate.end());
  check_candidate(family, candidate);
  PredicateResult res;
  auto fail = [&](std::string why) {
    res.holds = false;
    res.violation = std::move(why);
    return res;
  };
  for (VertexSet a : h) {
    for (SymbolId s = 0; s < g.num_symbols(); ++s) {
      VertexSet r = g.step(a, s);
      if (!h.contains(r)) {
        return fail("r(" + format_set(g, a) + ", " + g.symbol_name(s) + ") = " + format_set(g, r) +
                    " is missing");
      }
    }
    for (VertexSet b : h) {
      if (!h.contains(a | b)) {
        return fail("union " + format_set(g, a) + " u " + format_set(g, b) + " is missing");
      }
    }
  }
  if (!h.empty()) {
    for (VertexSet b : family.members()) {
      for (VertexSet a : h) {
        if (b.subset_of(a) && !h.contains(b)) {
          return fail("subset " + format_set(g, b) + " of " + format_set(g, a) + " is missing");
        }
      }
    }
  }
  return res;
}

PredicateResult is_saturated(const AccommodatingSet& family, std::span<const VertexSet> candidate) {
  const auto& g = family.graph();
  check_candidate(family, candidate);
  std::unordered_set<VertexSet> h(candidate.begin(), candidate.end());
  PredicateResult res;
  for (VertexSet a : family.members()) {
    if (h.contains(a)) continue;
    bool all_in = true;
    for (SymbolId s = 0; s < g.num_symbols() && all_in; ++s) all_in = h.contains(g.step(a, s));
    if (all_in) {
      res.holds = false;
      res.violation = "every r(" + format_set(g, a) + ", a) lies in H but the set itself does not";
      return res;
    }
  }
  return res;
}

std::vector<VertexSet> HereditarySaturatedSet::members(const AccommodatingSet& family) const {
  std::vector<VertexSet> out;
  if (family.atoms()) {
    std::vector<VertexSet> inside;
    for (VertexSet a : *family.atoms()) {
      if (a.subset_of(max_)) inside.push_back(a);
    }
    if (inside.size() >= 20) throw Error("hereditary set too large to list");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inside.size()); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < inside.size(); ++i) {
        if ((mask >> i) & 1U) s |= inside[i];
      }
      out.push_back(s);
    }
  } else {
    for (VertexSet a : family.members()) {
      if (a.subset_of(max_)) out.push_back(a);
    }
  }
  canonicalize(out);
  return out;
}

HereditarySaturatedSet hs_closure(const AccommodatingSet& family, std::span<const VertexSet> seeds) {
  const auto& g = family.graph();
  VertexSet m;
  for (VertexSet s : seeds) {
    if (!family.contains(s)) {
      throw PreconditionError("seed " + format_set(g, s) + " is not in the family");
    }
    m |= s;
  }
  for (;;) {
    VertexSet next = m;
    for (SymbolId a = 0; a < g.num_symbols(); ++a) next |= g.step(m, a);
    next |= largest_saturating(family, next);
    if (next == m) break;
    m = next;
  }
  return HereditarySaturatedSet(m, m.empty(), m == family.top());
}

HereditarySaturatedSet hs_from_max(const AccommodatingSet& family, VertexSet max_element) {
  const auto& g = family.graph();
  if (!family.contains(max_element)) {
    throw PreconditionError(format_set(g, max_element) + " is not in the family");
  }
  if (!range_inside(g, max_element, max_element)) {
    throw PreconditionError("down-set of " + format_set(g, max_element) + " is not hereditary");
  }
  if (!largest_saturating(family, max_element).subset_of(max_element)) {
    throw PreconditionError("down-set of " + format_set(g, max_element) + " is not saturated");
  }
  return HereditarySaturatedSet(max_element, max_element.empty(), max_element == family.top());
}

IdealLattice enumerate_hs(const AccommodatingSet& family) {
  const auto& g = family.graph();
  std::vector<VertexSet> found;
  for (VertexSet m : family.members()) {
    if (!range_inside(g, m, m)) continue;
    if (!largest_saturating(family, m).subset_of(m)) continue;
    found.push_back(m);
  }
  std::sort(found.begin(), found.end(), size_then_canonical);

  IdealLattice lattice;
  for (VertexSet m : found) lattice.nodes.emplace_back(m, m.empty(), m == family.top());
  const std::size_t n = found.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (found[i] == found[j] || !found[i].subset_of(found[j])) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) {
        covered = !(found[i].subset_of(found[k]) && found[k].subset_of(found[j]) &&
                    found[k] != found[i] && found[k] != found[j]);
      }
      if (covered) lattice.hasse.emplace_back(i, j);
    }
  }
  return lattice;
}

std::string hasse_to_dot(const AccommodatingSet& family, const IdealLattice& lattice) {
  const auto& g = family.graph();
  std::ostringstream out;
  out << "digraph \"ideals\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(format_set(g, lattice.nodes[i].max_element()))
        << "];\n";
  }
  for (auto [i, j] : lattice.hasse) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

const char* to_string(IdealKind kind) noexcept {
  switch (kind) {
    case IdealKind::zero:
      return "zero";
    case IdealKind::proper:
      return "proper";
    case IdealKind::whole:
      return "whole";
  }
  return "?";
}

std::vector<SymbolId> restricted_alphabet(const LabelledGraph& g, VertexSet max_element) {
  std::vector<SymbolId> out;
  for (SymbolId a = 0; a < g.num_symbols(); ++a) {
    if (!g.step(g.all_vertices(), a).subset_of(max_element)) out.push_back(a);
  }
  return out;
}

IdealDescriptor ideal_descriptor(const AccommodatingSet& family, const HereditarySaturatedSet& h) {
  const auto& g = family.graph();
  IdealDescriptor d;
  d.kind = h.trivial() ? IdealKind::zero : h.full() ? IdealKind::whole : IdealKind::proper;
  d.max_element = h.max_element();
  std::vector<VertexSet> gens;
  if (family.atoms()) {
    std::size_t inside = 0;
    for (VertexSet a : *family.atoms()) inside += a.subset_of(h.max_element()) ? 1 : 0;
    if (inside < 9) {
      gens = h.members(family);
    } else {
      d.generators_truncated = true;
      for (VertexSet a : *family.atoms()) {
        if (a.subset_of(h.max_element())) gens.push_back(a);
      }
      gens.push_back(h.max_element());
      canonicalize(gens);
    }
  } else {
    gens = h.members(family);
  }
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](VertexSet s) { return s.empty(); }),
             gens.end());
  if (gens.size() > kGeneratorListing) {
    gens.resize(kGeneratorListing);
    d.generators_truncated = true;
  }
  d.generators = std::move(gens);
  d.restricted_alphabet = restricted_alphabet(g, h.max_element());
  if (h.trivial()) {
    d.spanning_set = "{0}";
  } else {
    d.spanning_set = "span{ s_alpha p_A s_beta* : A in B, A subset of " +
                     format_set(g, h.max_element()) + " }";
  }
  return d;
}

bool QuotientLabelledSpace::in_restricted_alphabet(SymbolId a) const noexcept {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), a);
}

VertexSet QuotientLabelledSpace::range(VertexSet a, std::span<const SymbolId> word) const {
  const auto& g = graph();
  VertexSet cur = representative(a);
  for (SymbolId s : word) {
    if (!in_restricted_alphabet(s)) return VertexSet{};
    cur = representative(g.step(cur, s));
  }
  return cur;
}

QuotientLabelledSpace quotient_space(const AccommodatingSet& family, const HereditarySaturatedSet& h) {
  const auto& g = family.graph();
  if (!family.is_complement_closed()) {
    throw PreconditionError("quotient requires a family closed under relative complements");
  }
  if (auto wlr = is_weakly_left_resolving(family); !wlr.holds) {
    throw PreconditionError("quotient requires a weakly left-resolving labelled space");
  }
  // Validate H as a hereditary saturated down-set before using it.
  (void)hs_from_max(family, h.max_element());

  QuotientLabelledSpace q;
  q.base_ = &family;
  q.max_ = h.max_element();
  q.alphabet_ = restricted_alphabet(g, q.max_);

  if (family.atoms()) {
    std::vector<VertexSet> outside;
    for (VertexSet a : *family.atoms()) {
      if (!a.subset_of(q.max_)) outside.push_back(a);
    }
    q.class_atoms_ = outside;
  }
  if (family.size() <= AccommodatingSet::kListLimit) {
    std::vector<VertexSet> reps;
    for (VertexSet a : family.members()) reps.push_back(q.representative(a));
    canonicalize(reps);
    q.classes_ = std::move(reps);
  }

  if (family.size() <= kDefinitionalCheckLimit) {
    const auto members = family.members();
    const auto hs = h.members(family);
    for (VertexSet a : members) {
      for (VertexSet b : members) {
        bool related = std::any_of(hs.begin(), hs.end(),
                                   [&](VertexSet w) { return (a | w) == (b | w); });
        if (related != q.equivalent(a, b)) {
          throw Error("representative map disagrees with the definitional relation on " +
                      format_set(g, a) + ", " + format_set(g, b));
        }
      }
    }
    q.definitional_checked_ = true;
  }

  const std::vector<VertexSet>& probe = q.class_atoms_ ? *q.class_atoms_ : q.classes_;
  for (std::size_t i = 0; i < probe.size() && !q.wlr_witness_; ++i) {
    for (std::size_t j = i + 1; j < probe.size() && !q.wlr_witness_; ++j) {
      for (SymbolId s : q.alphabet_) {
        VertexSet lhs = q.representative(g.step(probe[i], s)) & q.representative(g.step(probe[j], s));
        VertexSet rhs = q.representative(g.step(probe[i] & probe[j], s));
        if (lhs != rhs) {
          q.wlr_witness_ = WlrWitness{probe[i], probe[j], s};
          break;
        }
      }
    }
  }
  return q;
}

}  // namespace lgraph
