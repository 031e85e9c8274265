#ifndef LGRAPH_DYNAMICS_HPP
#define LGRAPH_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgraph/graph.hpp"

namespace lgraph {

enum class Verdict { confirmed, refuted, unknown };

const char* to_string(Verdict v) noexcept;

/// Largest period bound accepted by the disagreeability procedures.
inline constexpr std::size_t kMaxPeriodBound = 63;

/// Length of the shortest period of a nonempty word, from its border array.
std::size_t smallest_period(std::span<const SymbolId> word);

/// True iff word = beta w' = w' gamma with |beta| = |gamma| <= bound and w'
/// nonempty, i.e. the word has a period p <= min(bound, |word| - 1).
bool is_agreeable(std::span<const SymbolId> word, std::size_t bound);

/// Incremental period tracker for bound l: remembers the last l symbols and
/// which periods p in 1..l have been violated so far. Violations never heal,
/// so once every period has failed the word stays non-agreeable under any
/// extension.
class PeriodState {
 public:
  explicit PeriodState(std::size_t bound);

  void push(SymbolId a);
  /// p is viable iff word[i] == word[i+p] for all valid i.
  bool viable(std::size_t p) const noexcept { return !((failed_ >> p) & 1U); }
  bool all_failed() const noexcept { return failed_ == full_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t bound() const noexcept { return bound_; }

  /// Window and failure mask; two states with equal keys evolve identically.
  const std::vector<SymbolId>& window() const noexcept { return window_; }
  std::uint64_t failed_mask() const noexcept { return failed_; }

 private:
  std::size_t bound_;
  std::size_t length_ = 0;
  std::vector<SymbolId> window_;
  std::uint64_t failed_ = 0;
  std::uint64_t full_ = 0;
};

struct LevelDisagreeable {
  /// Some word of every sufficiently large length from the class is
  /// non-agreeable for this bound.
  bool disagreeable = false;
  /// Shortest word from the class after which every period <= bound has failed.
  std::optional<Word> witness;
  std::size_t states_explored = 0;
};

/// Exact decision for a fixed bound l, by searching the product of the subset
/// automaton started at `cls` with PeriodState.
LevelDisagreeable is_disagreeable_class(const LabelledGraph& g, VertexSet cls, std::size_t bound);

/// Bound-independent evidence that a class emits arbitrarily long
/// non-agreeable words for every bound.
struct DisagreeableCertificate {
  enum class Kind { branching, lasso };
  Kind kind;
  /// Vertex where the cycles are anchored.
  VertexId pivot;
  /// Path label from the class to the pivot (possibly empty).
  std::vector<SymbolId> prefix;
  /// branching: two cycles at the pivot with cycle * other != other * cycle.
  /// lasso: a cycle at the pivot; prefix is not a suffix of cycle^k.
  std::vector<SymbolId> cycle;
  std::vector<SymbolId> other;
};

/// Looks for a branching certificate (two non-commuting cycles at a vertex
/// reachable from the class) or a lasso certificate.
std::optional<DisagreeableCertificate> find_disagreeable_certificate(const LabelledGraph& g,
                                                                     VertexSet cls);

/// A word from the class built from a certificate with no period <= bound.
std::vector<SymbolId> certificate_word(const DisagreeableCertificate& cert, std::size_t bound);

struct ClassEvidence {
  VertexSet cls;
  std::size_t first_level;
  std::optional<DisagreeableCertificate> certificate;
};

struct DisagreeableReport {
  Verdict verdict = Verdict::unknown;
  std::size_t lmax = 8;
  std::size_t stabilization_depth = 1;
  /// Set when REFUTED: the class and level with no long non-agreeable words.
  std::optional<VertexSet> refuting_class;
  std::size_t refuting_level = 0;
  std::vector<ClassEvidence> classes;
  std::string note;
};

/// Runs the exact level check for every class of levels 1..lmax (REFUTED on
/// the first failure) and reports CONFIRMED only when every generalized vertex
/// carries a certificate; otherwise UNKNOWN.
DisagreeableReport is_disagreeable(const LabelledGraph& g, std::size_t lmax = 8);

/// Union of r(C, lambda) over all labelled paths lambda.
VertexSet label_reachable(const LabelledGraph& g, VertexSet cls);

/// x = prefix cycle cycle ..., read from w, staying outside the label-reachable
/// set of `target` when started from [w]_1.
struct CofinalityWitness {
  VertexId start;
  VertexSet target;
  std::size_t target_level = 1;
  std::vector<SymbolId> prefix;
  std::vector<SymbolId> cycle;
};

struct CofinalityReport {
  Verdict verdict = Verdict::confirmed;
  std::optional<CofinalityWitness> witness;
  std::size_t states_explored = 0;
};

/// Exact decision on finite graphs. For every vertex w and every generalized
/// vertex [v]_l (l up to the stabilization depth), searches the product subset
/// automaton of states (r({w}, x), r([w]_1, x)) for a reachable cycle of states
/// with r({w}, x) nonempty and r([w]_1, x) not inside label_reachable([v]_l).
/// Throws PreconditionError when E-bar is not weakly left-resolving.
CofinalityReport is_strongly_cofinal(const LabelledGraph& g);

/// Re-checks a cofinality counterexample by direct simulation.
bool validate_cofinality_witness(const LabelledGraph& g, const CofinalityWitness& w);

enum class Simplicity { simple, not_simple, unknown };

const char* to_string(Simplicity s) noexcept;

struct SimplicityVerdict {
  Simplicity verdict = Simplicity::unknown;
  CofinalityReport cofinality;
  DisagreeableReport disagreeable;
};

/// Strongly cofinal and disagreeable. Throws PreconditionError when E-bar is
/// not weakly left-resolving.
SimplicityVerdict is_simple(const LabelledGraph& g, std::size_t lmax = 8);

}  // namespace lgraph

#endif  // LGRAPH_DYNAMICS_HPP
