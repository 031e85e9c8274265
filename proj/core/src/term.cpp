#include "lgraph/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgraph/error.hpp"

namespace lgraph {

Coeff Coeff::inverse() const {
  const Rational n = re * re + im * im;
  if (n == 0) throw std::domain_error("inverse of zero coefficient");
  return {re / n, -im / n};
}

namespace {

std::string rational_text(const Rational& r) { return r.str(); }

}  // namespace

std::string to_string(const Coeff& c) {
  if (c.im == 0) return rational_text(c.re);
  std::string imag;
  if (c.im == 1) imag = "i";
  else if (c.im == -1) imag = "-i";
  else imag = rational_text(c.im) + "*i";
  if (c.re == 0) return "(" + imag + ")";
  return "(" + rational_text(c.re) + (c.im > 0 ? "+" : "") + imag + ")";
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.set != b.set) return canonical_less(a.set, b.set);
  return a.beta < b.beta;
}

void TermSum::add(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TermSum& TermSum::operator+=(const TermSum& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

TermSum& TermSum::operator-=(const TermSum& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

TermSum operator*(const Coeff& c, const TermSum& x) {
  TermSum out;
  if (c.is_zero()) return out;
  for (const auto& [m, d] : x.terms_) out.terms_.emplace(m, c * d);
  return out;
}

TermAlgebra::TermAlgebra(const AccommodatingSet& family) : family_(&family) {
  if (family.atoms()) atoms_ = *family.atoms();
}

TermAlgebra::TermAlgebra(const QuotientLabelledSpace& quotient)
    : family_(&quotient.base()), quotient_(true), max_(quotient.max_element()) {
  if (quotient.class_atoms()) atoms_ = *quotient.class_atoms();
}

Monomial TermAlgebra::normalize(Monomial m) const {
  const LabelledGraph& g = graph();
  VertexSet a = m.set;
  if (!m.alpha.empty()) a = a & relative_range(g, g.all_vertices(), m.alpha);
  if (!m.beta.empty()) a = a & relative_range(g, g.all_vertices(), m.beta);
  m.set = a - max_;
  return m;
}

TermSum TermAlgebra::monomial(std::vector<SymbolId> alpha, VertexSet a, std::vector<SymbolId> beta,
                              const Coeff& c) const {
  for (SymbolId s : alpha)
    if (s >= graph().num_symbols()) throw std::out_of_range("unknown symbol id");
  for (SymbolId s : beta)
    if (s >= graph().num_symbols()) throw std::out_of_range("unknown symbol id");
  if (!family_->contains(a | max_))
    throw PreconditionError(format_set(graph(), a) + " is not in the accommodating set");
  TermSum out;
  Monomial m = normalize({std::move(alpha), a, std::move(beta)});
  if (!m.set.empty()) out.add(m, c);
  return out;
}

TermSum TermAlgebra::partial_isometry(std::vector<SymbolId> alpha) const {
  if (alpha.empty()) throw std::invalid_argument("partial_isometry: empty word");
  const VertexSet r = relative_range(graph(), graph().all_vertices(), alpha);
  return monomial(std::move(alpha), r, {});
}

namespace {

bool has_prefix(const std::vector<SymbolId>& word, const std::vector<SymbolId>& prefix) {
  return prefix.size() <= word.size() && std::equal(prefix.begin(), prefix.end(), word.begin());
}

std::vector<SymbolId> tail(const std::vector<SymbolId>& word, std::size_t from) {
  return {word.begin() + static_cast<std::ptrdiff_t>(from), word.end()};
}

std::vector<SymbolId> join(std::vector<SymbolId> a, const std::vector<SymbolId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TermSum TermAlgebra::multiply(const Monomial& x, const Monomial& y) const {
  const LabelledGraph& g = graph();
  TermSum out;
  Monomial m;
  if (has_prefix(y.alpha, x.beta)) {
    // gamma = beta gamma'
    const auto rest = tail(y.alpha, x.beta.size());
    m = {join(x.alpha, rest), relative_range(g, x.set, rest) & y.set, y.beta};
    if (rest.empty()) m.set = x.set & y.set;
  } else if (has_prefix(x.beta, y.alpha)) {
    // beta = gamma beta'
    const auto rest = tail(x.beta, y.alpha.size());
    m = {x.alpha, x.set & relative_range(g, y.set, rest), join(y.beta, rest)};
  } else {
    return out;
  }
  m = normalize(std::move(m));
  if (!m.set.empty()) out.add(m, Coeff(1));
  return out;
}

TermSum TermAlgebra::multiply(const TermSum& x, const TermSum& y) const {
  TermSum out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const TermSum p = multiply(mx, my);
      for (const auto& [m, c] : p.terms()) out.add(m, c * cx * cy);
    }
  }
  return out;
}

TermSum TermAlgebra::adjoint(const TermSum& x) const {
  TermSum out;
  for (const auto& [m, c] : x.terms()) out.add(Monomial{m.beta, m.set, m.alpha}, c.conj());
  return out;
}

TermSum TermAlgebra::expand_level(const TermSum& x, std::size_t n) const {
  const LabelledGraph& g = graph();
  TermSum out;
  for (const auto& [m0, c] : x.terms()) {
    const std::size_t have = std::min(m0.alpha.size(), m0.beta.size());
    std::vector<Monomial> frontier{m0};
    for (std::size_t k = have; k < n; ++k) {
      std::vector<Monomial> next;
      for (const Monomial& m : frontier) {
        for (SymbolId a = 0; a < g.num_symbols(); ++a) {
          const VertexSet r = g.step(m.set, a);
          if (r.empty()) continue;
          Monomial e{m.alpha, r, m.beta};
          e.alpha.push_back(a);
          e.beta.push_back(a);
          e = normalize(std::move(e));
          if (!e.set.empty()) next.push_back(std::move(e));
        }
      }
      frontier = std::move(next);
    }
    for (const Monomial& m : frontier) out.add(m, c);
  }
  return out;
}

TermSum TermAlgebra::canonical_form(const TermSum& x, std::size_t n) const {
  const TermSum expanded = expand_level(x, n);
  if (atoms_.empty()) return expanded;
  TermSum out;
  for (const auto& [m, c] : expanded.terms()) {
    bool split = false;
    for (VertexSet atom : atoms_) {
      if (!atom.intersects(m.set)) continue;
      if (!atom.subset_of(m.set)) {
        split = false;
        break;
      }
      split = true;
    }
    if (!split) {
      out.add(m, c);
      continue;
    }
    for (VertexSet atom : atoms_) {
      if (atom.subset_of(m.set)) out.add(Monomial{m.alpha, atom, m.beta}, c);
    }
  }
  return out;
}

TermComparison TermAlgebra::compare(const TermSum& x, const TermSum& y) const {
  std::size_t n = 0;
  for (const TermSum* t : {&x, &y})
    for (const auto& [m, c] : t->terms()) n = std::max(n, std::min(m.alpha.size(), m.beta.size()));
  TermComparison result;
  result.equal = canonical_form(x, n) == canonical_form(y, n);
  if (!result.equal)
    result.note = "canonical forms differ; distinct forms are not certified to be distinct elements";
  return result;
}

TermSum TermAlgebra::gauge_transform(const TermSum& x, const Coeff& z) const {
  const Coeff zinv = z.inverse();
  TermSum out;
  for (const auto& [m, c] : x.terms()) {
    Coeff f(1);
    const long d = m.degree();
    for (long i = 0; i < std::labs(d); ++i) f = f * (d > 0 ? z : zinv);
    out.add(m, f * c);
  }
  return out;
}

TermSum TermAlgebra::gauge_transform_symbolic(const TermSum& x, long k) const {
  static const Coeff powers[4] = {Coeff(1), Coeff::i(), Coeff(-1), -Coeff::i()};
  return gauge_transform(x, powers[((k % 4) + 4) % 4]);
}

std::string TermAlgebra::format(const Monomial& m) const {
  const LabelledGraph& g = graph();
  std::string out;
  if (!m.alpha.empty()) out += "s(" + format_word(g, m.alpha) + ") * ";
  out += "p(" + format_set(g, m.set) + ")";
  if (!m.beta.empty()) out += " * adj(s(" + format_word(g, m.beta) + "))";
  return out;
}

std::string TermAlgebra::format(const TermSum& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Coeff shown = c;
    if (c.im == 0 && c.re < 0) {
      out += first ? "-" : " - ";
      shown = -c;
    } else if (!first) {
      out += " + ";
    }
    if (!(shown == Coeff(1))) {
      std::string text = to_string(shown);
      if (text.find('/') != std::string::npos && text.front() != '(') text = "(" + text + ")";
      out += text + " * ";
    }
    out += format(m);
    first = false;
  }
  return out;
}

long gauge_degree(const Monomial& m) { return m.degree(); }

bool is_gauge_fixed(const TermSum& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& kv) { return kv.first.degree() == 0; });
}

bool in_ideal(const TermAlgebra& base, const Monomial& m, const HereditarySaturatedSet& h) {
  return base.normalize(m).set.subset_of(h.max_element());
}

TermSum quotient_map(const TermAlgebra& base, const TermSum& x, const TermAlgebra& quotient) {
  if (base.quotient_mode() || !quotient.quotient_mode())
    throw std::invalid_argument("quotient_map: expects a base algebra and a quotient algebra");
  const LabelledGraph& g = base.graph();
  const VertexSet mx = quotient.ideal_max();
  auto allowed = [&](const std::vector<SymbolId>& w) {
    return std::all_of(w.begin(), w.end(), [&](SymbolId a) {
      return !relative_range(g, g.all_vertices(), std::span<const SymbolId>(&a, 1)).subset_of(mx);
    });
  };
  TermSum out;
  for (const auto& [m, c] : x.terms()) {
    if (!allowed(m.alpha) || !allowed(m.beta)) continue;
    Monomial q = quotient.normalize(m);
    if (!q.set.empty()) out.add(q, c);
  }
  return out;
}

}  // namespace lgraph
