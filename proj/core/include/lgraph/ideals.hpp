#ifndef LGRAPH_IDEALS_HPP
#define LGRAPH_IDEALS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgraph/accommodating.hpp"

namespace lgraph {

struct PredicateResult {
  bool holds = true;
  /// Human-readable description of the first violation found.
  std::string violation;

  explicit operator bool() const noexcept { return holds; }
};

/// Definitional check of the hereditary axioms: closure under relative
/// ranges, finite unions, and passage to subsets that belong to B. Throws
/// PreconditionError when a candidate member is not in B.
PredicateResult is_hereditary(const AccommodatingSet& family, std::span<const VertexSet> candidate);

/// For every A in B: r(A,a) in H for all letters a implies A in H.
PredicateResult is_saturated(const AccommodatingSet& family, std::span<const VertexSet> candidate);

/// A hereditary saturated subfamily H, stored as its largest member M so that
/// H = {A in B : A subset of M}.
class HereditarySaturatedSet {
 public:
  HereditarySaturatedSet(VertexSet max_element, bool trivial, bool full)
      : max_(max_element), trivial_(trivial), full_(full) {}

  VertexSet max_element() const noexcept { return max_; }
  /// H = {empty set}, corresponding to the zero ideal.
  bool trivial() const noexcept { return trivial_; }
  /// H = B, corresponding to the whole algebra.
  bool full() const noexcept { return full_; }
  bool contains(VertexSet a) const noexcept { return a.subset_of(max_); }
  /// Members of H in canonical order.
  std::vector<VertexSet> members(const AccommodatingSet& family) const;

  friend bool operator==(const HereditarySaturatedSet& a, const HereditarySaturatedSet& b) {
    return a.max_ == b.max_;
  }

 private:
  VertexSet max_;
  bool trivial_;
  bool full_;
};

/// Smallest hereditary saturated set containing `seeds`.
HereditarySaturatedSet hs_closure(const AccommodatingSet& family, std::span<const VertexSet> seeds);

/// Wraps a set M as hereditary saturated; throws PreconditionError unless the
/// down-set of M is hereditary and saturated.
HereditarySaturatedSet hs_from_max(const AccommodatingSet& family, VertexSet max_element);

struct IdealLattice {
  /// All hereditary saturated sets, listed along a linear extension of
  /// inclusion (smaller first); the first entry is the trivial one.
  std::vector<HereditarySaturatedSet> nodes;
  /// Covering pairs (i, j): nodes[i] is strictly below nodes[j] with nothing
  /// in between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

/// Enumerates hereditary saturated subsets of B. Candidates are the members M
/// with r(M,a) inside M for every a, filtered by saturation. Nonzero
/// gauge-invariant ideals correspond to the non-trivial entries.
IdealLattice enumerate_hs(const AccommodatingSet& family);

std::string hasse_to_dot(const AccommodatingSet& family, const IdealLattice& lattice);

enum class IdealKind { zero, proper, whole };

const char* to_string(IdealKind kind) noexcept;

/// Description of the gauge-invariant ideal I_H generated by {p_A : A in H}.
struct IdealDescriptor {
  IdealKind kind;
  VertexSet max_element;
  /// Sets A with p_A a generator, canonical order (capped listing).
  std::vector<VertexSet> generators;
  bool generators_truncated = false;
  /// Symbols a with r(a) not inside M: the alphabet of the quotient.
  std::vector<SymbolId> restricted_alphabet;
  /// Textual form of the spanning set of I_H.
  std::string spanning_set;
};

IdealDescriptor ideal_descriptor(const AccommodatingSet& family, const HereditarySaturatedSet& h);

/// {a : r(a) not inside M}
std::vector<SymbolId> restricted_alphabet(const LabelledGraph& g, VertexSet max_element);

/// The quotient labelled space B / ~_H with classes represented by A \ M.
class QuotientLabelledSpace {
 public:
  const AccommodatingSet& base() const noexcept { return *base_; }
  const LabelledGraph& graph() const noexcept { return base_->graph(); }
  VertexSet max_element() const noexcept { return max_; }
  const std::vector<SymbolId>& restricted_alphabet() const noexcept { return alphabet_; }
  bool in_restricted_alphabet(SymbolId a) const noexcept;

  /// Canonical representative of [A].
  VertexSet representative(VertexSet a) const noexcept { return a - max_; }
  bool is_zero(VertexSet a) const noexcept { return a.subset_of(max_); }
  bool equivalent(VertexSet a, VertexSet b) const noexcept {
    return representative(a) == representative(b);
  }
  /// r([A], alpha) = [r(A, alpha)]; alpha must avoid symbols outside the
  /// restricted alphabet, otherwise the result is [empty].
  VertexSet range(VertexSet a, std::span<const SymbolId> word) const;

  /// Distinct class representatives, canonical order (capped listing).
  const std::vector<VertexSet>& classes() const noexcept { return classes_; }
  /// Atoms of the quotient Boolean algebra (atoms of B outside M), if B has atoms.
  const std::optional<std::vector<VertexSet>>& class_atoms() const noexcept { return class_atoms_; }

  /// Whether the representative map was compared against the definitional
  /// relation (A ~ B iff A u W = B u W for some W in H) on all pairs.
  bool definitional_check_run() const noexcept { return definitional_checked_; }
  bool weakly_left_resolving() const noexcept { return !wlr_witness_; }
  const std::optional<WlrWitness>& wlr_witness() const noexcept { return wlr_witness_; }

  friend QuotientLabelledSpace quotient_space(const AccommodatingSet&, const HereditarySaturatedSet&);

 private:
  QuotientLabelledSpace() = default;

  const AccommodatingSet* base_ = nullptr;
  VertexSet max_;
  std::vector<SymbolId> alphabet_;
  std::vector<VertexSet> classes_;
  std::optional<std::vector<VertexSet>> class_atoms_;
  bool definitional_checked_ = false;
  std::optional<WlrWitness> wlr_witness_;
};

/// Largest family size for which quotient_space checks the representative
/// map against the definitional relation.
inline constexpr std::size_t kDefinitionalCheckLimit = 64;

/// Builds the quotient space. Requires B to be weakly left-resolving and
/// complement-closed (PreconditionError otherwise). Throws Error if the
/// representative map disagrees with the definitional relation.
QuotientLabelledSpace quotient_space(const AccommodatingSet& family, const HereditarySaturatedSet& h);

}  // namespace lgraph

#endif  // LGRAPH_IDEALS_HPP
