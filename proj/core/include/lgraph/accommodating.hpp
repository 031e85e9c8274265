#ifndef LGRAPH_ACCOMMODATING_HPP
#define LGRAPH_ACCOMMODATING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgraph/graph.hpp"
#include "lgraph/vertex_set.hpp"

namespace lgraph {

enum class FamilyKind { minimal, complement_closed, custom };

const char* to_string(FamilyKind kind) noexcept;

/// A finite family B of vertex subsets that contains every r(a) and is closed
/// under finite unions, intersections and relative ranges.
///
/// A family is stored either as the Boolean algebra generated by a partition
/// of its union into atoms (membership means "is a union of atoms") or as an
/// explicit canonical list. The graph must outlive the family.
class AccommodatingSet {
 public:
  /// Largest family that members() will materialize.
  static constexpr std::size_t kListLimit = std::size_t{1} << 20;

  const LabelledGraph& graph() const noexcept { return *graph_; }
  FamilyKind kind() const noexcept { return kind_; }

  bool contains(VertexSet s) const;
  /// Number of members, including the empty set.
  std::uint64_t size() const noexcept;
  /// All members in canonical order. Throws Error above kListLimit members.
  std::vector<VertexSet> members() const;

  /// Present when the family is exactly the set of unions of these atoms.
  const std::optional<std::vector<VertexSet>>& atoms() const noexcept { return atoms_; }
  bool is_boolean_algebra() const noexcept { return atoms_.has_value(); }
  bool is_complement_closed() const;

  /// Union of all members.
  VertexSet top() const noexcept { return top_; }
  /// Largest member contained in s (members are closed under unions).
  VertexSet largest_member_within(VertexSet s) const;

  /// Set when the complement-closed family could not be built from the ~_inf
  /// atoms and a generic closure was used instead.
  bool used_fallback() const noexcept { return fallback_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend AccommodatingSet minimal_accommodating(const LabelledGraph& g);
  friend AccommodatingSet bar_accommodating(const LabelledGraph& g);
  friend AccommodatingSet custom_accommodating(const LabelledGraph& g,
                                               std::span<const VertexSet> sets);

 private:
  AccommodatingSet(const LabelledGraph& g, FamilyKind kind) : graph_(&g), kind_(kind) {}
  void set_explicit(std::vector<VertexSet> sets);
  void set_atoms(std::vector<VertexSet> atoms);

  const LabelledGraph* graph_;
  FamilyKind kind_;
  std::optional<std::vector<VertexSet>> atoms_;
  std::vector<VertexSet> explicit_;  // canonical, used when atoms_ is empty
  VertexSet top_;
  bool fallback_ = false;
  std::vector<std::string> warnings_;
};

/// E^{0,-}: the closure of {r(a)} under relative ranges, unions and
/// intersections, with the empty set included.
AccommodatingSet minimal_accommodating(const LabelledGraph& g);

/// The complement-closed accommodating set E-bar.
///
/// Built as the Boolean algebra over the ~_inf classes when every r(a) and
/// every r(atom, a) is a union of classes; otherwise the closure of
/// E^{0,-} together with all generalized vertices under unions, intersections,
/// relative complements and relative ranges, flagged through used_fallback().
AccommodatingSet bar_accommodating(const LabelledGraph& g);

/// Validates a user-supplied family (the empty set is added). Throws
/// PreconditionError naming the first closure property that fails.
AccommodatingSet custom_accommodating(const LabelledGraph& g, std::span<const VertexSet> sets);

/// Closure of `seeds` (plus the empty set) under unions, intersections,
/// relative ranges by single letters and, optionally, relative complements.
/// Throws Error when the closure exceeds AccommodatingSet::kListLimit sets.
std::vector<VertexSet> close_family(const LabelledGraph& g, std::vector<VertexSet> seeds,
                                    bool with_complements);

/// Splits the union of `sets` into the coarsest partition refining every set.
std::vector<VertexSet> cells_of(std::span<const VertexSet> sets);

struct WlrWitness {
  VertexSet a;
  VertexSet b;
  SymbolId symbol;
};

struct WlrResult {
  bool holds = true;
  std::optional<WlrWitness> witness;
};

/// r(A,a) meet r(B,a) = r(A meet B, a) for all members A, B and letters a.
/// Single letters suffice because members are closed under relative ranges.
/// On a Boolean algebra only pairs of distinct atoms need checking.
WlrResult is_weakly_left_resolving(const AccommodatingSet& family);

/// L(A E^1) is finite for every member.
bool is_set_finite(const AccommodatingSet& family);
/// L(E^1 A) is finite for every member.
bool is_receiver_set_finite(const AccommodatingSet& family);

}  // namespace lgraph

#endif  // LGRAPH_ACCOMMODATING_HPP
