#ifndef LGRAPH_TERM_HPP
#define LGRAPH_TERM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgraph/accommodating.hpp"
#include "lgraph/graph.hpp"
#include "lgraph/ideals.hpp"

namespace lgraph {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex coefficient re + im i.
struct Coeff {
  Rational re{0};
  Rational im{0};

  Coeff() = default;
  Coeff(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Coeff(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static Coeff i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  Coeff conj() const { return {re, -im}; }
  /// Throws std::domain_error on zero.
  Coeff inverse() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.re + b.re, a.im + b.im}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.re - b.re, a.im - b.im}; }
  friend Coeff operator-(const Coeff& a) { return {-a.re, -a.im}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const Coeff& c);

/// s_alpha p_A s_beta^*; an empty word means the factor is absent.
struct Monomial {
  std::vector<SymbolId> alpha;
  VertexSet set;
  std::vector<SymbolId> beta;

  /// |alpha| - |beta|
  long degree() const noexcept {
    return static_cast<long>(alpha.size()) - static_cast<long>(beta.size());
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Finite linear combination of nonzero monomials with nonzero coefficients.
class TermSum {
 public:
  using Map = std::map<Monomial, Coeff, MonomialLess>;

  TermSum() = default;

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * m; callers pass normalized, nonzero monomials.
  void add(const Monomial& m, const Coeff& c);

  TermSum& operator+=(const TermSum& other);
  TermSum& operator-=(const TermSum& other);
  friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
  friend TermSum operator-(TermSum a, const TermSum& b) { return a -= b; }
  friend TermSum operator*(const Coeff& c, const TermSum& x);
  friend bool operator==(const TermSum&, const TermSum&) = default;

 private:
  Map terms_;
};

struct TermComparison {
  /// Canonical forms coincide, so the elements are equal.
  bool equal = false;
  /// Set when the forms differ; distinct forms are not certified to denote
  /// distinct elements.
  std::string note;
};

/// The *-algebraic span calculus of C*(E, L, B), or of the quotient
/// C*(E, L, B / H) when built from a quotient space. The family (and the
/// quotient space) must outlive the algebra.
class TermAlgebra {
 public:
  explicit TermAlgebra(const AccommodatingSet& family);
  explicit TermAlgebra(const QuotientLabelledSpace& quotient);

  const LabelledGraph& graph() const noexcept { return family_->graph(); }
  const AccommodatingSet& family() const noexcept { return *family_; }
  bool quotient_mode() const noexcept { return quotient_; }
  /// Max element of the ideal in quotient mode, empty otherwise.
  VertexSet ideal_max() const noexcept { return max_; }

  /// A replaced by A n r(alpha) n r(beta), minus M in quotient mode.
  Monomial normalize(Monomial m) const;
  bool is_zero(const Monomial& m) const { return normalize(m).set.empty(); }

  /// c * s_alpha p_A s_beta^*; A must be a member of the family.
  TermSum monomial(std::vector<SymbolId> alpha, VertexSet a, std::vector<SymbolId> beta,
                   const Coeff& c = Coeff(1)) const;
  TermSum projection(VertexSet a) const { return monomial({}, a, {}); }
  /// s_alpha = s_alpha p_{r(alpha)} for a nonempty word.
  TermSum partial_isometry(std::vector<SymbolId> alpha) const;

  TermSum multiply(const TermSum& x, const TermSum& y) const;
  TermSum multiply(const Monomial& x, const Monomial& y) const;
  TermSum adjoint(const TermSum& x) const;

  /// Pads every monomial with min(|alpha|, |beta|) < n to that length using
  /// p_A = sum over sigma in L(A E^k) of s_sigma p_{r(A, sigma)} s_sigma^*.
  TermSum expand_level(const TermSum& x, std::size_t n) const;
  /// Expansion to level n followed by splitting every projection over atoms.
  TermSum canonical_form(const TermSum& x, std::size_t n) const;
  /// Compares canonical forms at the common level max min(|alpha|, |beta|).
  TermComparison compare(const TermSum& x, const TermSum& y) const;
  bool equal(const TermSum& x, const TermSum& y) const { return compare(x, y).equal; }

  /// Multiplies each term by z^degree (z nonzero).
  TermSum gauge_transform(const TermSum& x, const Coeff& z) const;
  /// z = i^k.
  TermSum gauge_transform_symbolic(const TermSum& x, long k) const;

  std::string format(const Monomial& m) const;
  std::string format(const TermSum& x) const;

 private:
  const AccommodatingSet* family_;
  bool quotient_ = false;
  VertexSet max_;
  std::vector<VertexSet> atoms_;
};

long gauge_degree(const Monomial& m);
/// Every monomial has degree 0.
bool is_gauge_fixed(const TermSum& x);

/// The monomial lies in the ideal generated by H: normalized A is inside max(H).
bool in_ideal(const TermAlgebra& base, const Monomial& m, const HereditarySaturatedSet& h);

/// Image in the quotient algebra: drops words with letters outside the
/// restricted alphabet and classes equal to [empty], and keeps A \ M.
TermSum quotient_map(const TermAlgebra& base, const TermSum& x, const TermAlgebra& quotient);

}  // namespace lgraph

#endif  // LGRAPH_TERM_HPP
