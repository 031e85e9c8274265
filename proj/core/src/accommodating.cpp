#include "lgraph/accommodating.hpp"

#include <algorithm>
#include <unordered_set>

#include "lgraph/error.hpp"
#include "lgraph/partition.hpp"

namespace lgraph {

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::minimal:
      return "minimal";
    case FamilyKind::complement_closed:
      return "complement-closed";
    case FamilyKind::custom:
      return "custom";
  }
  return "?";
}

namespace {

bool is_union_of(VertexSet s, std::span<const VertexSet> atoms) {
  VertexSet covered;
  for (VertexSet a : atoms) {
    if (a.subset_of(s)) {
      covered |= a;
    } else if (a.intersects(s)) {
      return false;
    }
  }
  return covered == s;
}

}  // namespace

std::vector<VertexSet> cells_of(std::span<const VertexSet> sets) {
  VertexSet all;
  for (VertexSet s : sets) all |= s;
  std::vector<VertexSet> cells;
  if (!all.empty()) cells.push_back(all);
  for (VertexSet s : sets) {
    std::vector<VertexSet> next;
    for (VertexSet c : cells) {
      if (!(c & s).empty()) next.push_back(c & s);
      if (!(c - s).empty()) next.push_back(c - s);
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(),
            [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return cells;
}

std::vector<VertexSet> close_family(const LabelledGraph& g, std::vector<VertexSet> seeds,
                                    bool with_complements) {
  std::vector<VertexSet> family;
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> work;
  auto add = [&](VertexSet s) {
    if (seen.insert(s).second) {
      if (seen.size() > AccommodatingSet::kListLimit) {
        throw Error("accommodating family closure exceeds the listing limit");
      }
      work.push_back(s);
    }
  };
  add(VertexSet{});
  for (VertexSet s : seeds) add(s);
  while (!work.empty()) {
    VertexSet s = work.back();
    work.pop_back();
    for (SymbolId a = 0; a < g.num_symbols(); ++a) add(g.step(s, a));
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
      VertexSet t = family[i];
      add(s | t);
      add(s & t);
      if (with_complements) {
        add(s - t);
        add(t - s);
      }
    }
    family.push_back(s);
  }
  canonicalize(family);
  return family;
}

void AccommodatingSet::set_explicit(std::vector<VertexSet> sets) {
  canonicalize(sets);
  if (sets.empty() || !sets.front().empty()) sets.insert(sets.begin(), VertexSet{});
  top_ = VertexSet{};
  for (VertexSet s : sets) top_ |= s;
  auto cells = cells_of(sets);
  if (cells.size() < 64 && sets.size() == (std::uint64_t{1} << cells.size())) {
    atoms_ = std::move(cells);
  } else {
    atoms_.reset();
  }
  explicit_ = std::move(sets);
}

void AccommodatingSet::set_atoms(std::vector<VertexSet> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  top_ = VertexSet{};
  for (VertexSet a : atoms) top_ |= a;
  atoms_ = std::move(atoms);
  explicit_.clear();
}

bool AccommodatingSet::contains(VertexSet s) const {
  if (atoms_) return is_union_of(s, *atoms_);
  return std::binary_search(explicit_.begin(), explicit_.end(), s, CanonicalLess{});
}

std::uint64_t AccommodatingSet::size() const noexcept {
  if (atoms_) {
    return atoms_->size() >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << atoms_->size();
  }
  return explicit_.size();
}

std::vector<VertexSet> AccommodatingSet::members() const {
  if (!explicit_.empty()) return explicit_;
  if (size() > kListLimit) throw Error("family too large to list");
  const auto& at = *atoms_;
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < at.size(); ++i) {
      if ((mask >> i) & 1U) s |= at[i];
    }
    out.push_back(s);
  }
  canonicalize(out);
  return out;
}

bool AccommodatingSet::is_complement_closed() const {
  if (atoms_) return true;
  for (VertexSet a : explicit_) {
    for (VertexSet b : explicit_) {
      if (!contains(a - b)) return false;
    }
  }
  return true;
}

VertexSet AccommodatingSet::largest_member_within(VertexSet s) const {
  VertexSet out;
  if (atoms_) {
    for (VertexSet a : *atoms_) {
      if (a.subset_of(s)) out |= a;
    }
    return out;
  }
  for (VertexSet m : explicit_) {
    if (m.subset_of(s)) out |= m;
  }
  return out;
}

AccommodatingSet minimal_accommodating(const LabelledGraph& g) {
  std::vector<VertexSet> seeds;
  for (SymbolId a = 0; a < g.num_symbols(); ++a) seeds.push_back(g.step(g.all_vertices(), a));
  AccommodatingSet family(g, FamilyKind::minimal);
  family.set_explicit(close_family(g, std::move(seeds), false));
  return family;
}

AccommodatingSet bar_accommodating(const LabelledGraph& g) {
  PartitionTower tower(g);
  const auto& atoms = tower.stable().classes;
  bool ok = true;
  for (SymbolId a = 0; a < g.num_symbols() && ok; ++a) {
    ok = is_union_of(g.step(g.all_vertices(), a), atoms);
    for (VertexSet atom : atoms) {
      if (!ok) break;
      ok = is_union_of(g.step(atom, a), atoms);
    }
  }
  AccommodatingSet family(g, FamilyKind::complement_closed);
  if (ok) {
    family.set_atoms(atoms);
    return family;
  }
  std::vector<VertexSet> seeds = minimal_accommodating(g).members();
  for (std::size_t l = 1; l <= tower.stabilization_depth(); ++l) {
    for (VertexSet c : tower.at(l).classes) seeds.push_back(c);
  }
  family.set_explicit(close_family(g, std::move(seeds), true));
  family.fallback_ = true;
  family.warnings_.push_back(
      "relative ranges of ~inf classes are not unions of classes; "
      "E-bar built by generic closure");
  return family;
}

AccommodatingSet custom_accommodating(const LabelledGraph& g, std::span<const VertexSet> sets) {
  AccommodatingSet family(g, FamilyKind::custom);
  family.set_explicit(std::vector<VertexSet>(sets.begin(), sets.end()));
  const auto members = family.members();
  for (SymbolId a = 0; a < g.num_symbols(); ++a) {
    VertexSet r = g.step(g.all_vertices(), a);
    if (!family.contains(r)) {
      throw PreconditionError("family does not contain r(" + g.symbol_name(a) +
                              ") = " + format_set(g, r));
    }
  }
  for (VertexSet s : members) {
    for (SymbolId a = 0; a < g.num_symbols(); ++a) {
      if (!family.contains(g.step(s, a))) {
        throw PreconditionError("family is not closed under relative range: r(" +
                                format_set(g, s) + ", " + g.symbol_name(a) + ")");
      }
    }
    for (VertexSet t : members) {
      if (!family.contains(s | t) || !family.contains(s & t)) {
        throw PreconditionError("family is not closed under union/intersection of " +
                                format_set(g, s) + " and " + format_set(g, t));
      }
    }
  }
  return family;
}

WlrResult is_weakly_left_resolving(const AccommodatingSet& family) {
  const auto& g = family.graph();
  WlrResult result;
  auto check = [&](VertexSet a, VertexSet b) {
    for (SymbolId s = 0; s < g.num_symbols(); ++s) {
      if ((g.step(a, s) & g.step(b, s)) != g.step(a & b, s)) {
        result.holds = false;
        result.witness = WlrWitness{a, b, s};
        return false;
      }
    }
    return true;
  };
  const std::vector<VertexSet> sets =
      family.atoms() ? *family.atoms() : family.members();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!check(sets[i], sets[j])) return result;
    }
  }
  return result;
}

bool is_set_finite(const AccommodatingSet& family) {
  const auto& g = family.graph();
  const auto sets = family.atoms() ? *family.atoms() : family.members();
  return std::all_of(sets.begin(), sets.end(), [&](VertexSet s) {
    return labels_out(g, s).size() <= g.num_symbols();
  });
}

bool is_receiver_set_finite(const AccommodatingSet& family) {
  const auto& g = family.graph();
  const auto sets = family.atoms() ? *family.atoms() : family.members();
  return std::all_of(sets.begin(), sets.end(), [&](VertexSet s) {
    return labels_in(g, s).size() <= g.num_symbols();
  });
}

}  // namespace lgraph
