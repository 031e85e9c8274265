#include "lgraph/term_expr.hpp"

#include <cctype>
#include <string>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

struct Value {
  bool scalar = false;
  Coeff c;
  TermSum t;
};

class Parser {
 public:
  Parser(const TermAlgebra& algebra, std::string_view text) : alg_(algebra), text_(text) {}

  TermSum run() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (v.scalar) {
      if (v.c.is_zero()) return {};
      fail("a bare scalar is not an element of the algebra");
    }
    return v.t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    std::size_t k = after;
    while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
    if (w != "i" && (k >= text_.size() || text_[k] != '(')) return false;
    if (w == "i" && after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    pos_ = w == "i" ? after : k + 1;
    return true;
  }

  std::string_view until_close() {
    const std::size_t start = pos_;
    const std::size_t end = text_.find(')', pos_);
    if (end == std::string_view::npos) fail("missing ')'");
    pos_ = end + 1;
    return text_.substr(start, end - start);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  Value add(Value a, const Value& b, bool minus) {
    if (a.scalar && b.scalar) {
      a.c = minus ? a.c - b.c : a.c + b.c;
      return a;
    }
    auto as_term = [&](const Value& v) {
      if (!v.scalar) return v.t;
      if (!v.c.is_zero()) fail("cannot add a scalar to an algebra element");
      return TermSum{};
    };
    TermSum l = as_term(a);
    TermSum r = as_term(b);
    return {false, {}, minus ? l - r : l + r};
  }

  Value mul(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return {true, a.c * b.c, {}};
    if (a.scalar) return {false, {}, a.c * b.t};
    if (b.scalar) return {false, {}, b.c * a.t};
    return {false, {}, alg_.multiply(a.t, b.t)};
  }

  Value expr() {
    Value v = product();
    for (;;) {
      if (accept('+')) v = add(std::move(v), product(), false);
      else if (accept('-')) v = add(std::move(v), product(), true);
      else return v;
    }
  }

  Value product() {
    Value v = unary();
    while (accept('*')) v = mul(v, unary());
    return v;
  }

  Value unary() {
    if (accept('-')) return mul({true, Coeff(-1), {}}, unary());
    return atom();
  }

  Rational integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(boost::multiprecision::cpp_int(std::string(text_.substr(start, pos_ - start))));
  }

  Value atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Rational r = integer();
      if (accept('/')) {
        Rational d = integer();
        if (d == 0) fail("division by zero");
        r /= d;
      }
      return {true, Coeff(r), {}};
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept_word("adj")) {
      Value v = expr();
      expect(')');
      if (v.scalar) return {true, v.c.conj(), {}};
      return {false, {}, alg_.adjoint(v.t)};
    }
    if (accept_word("s")) {
      const std::string_view body = trim(until_close());
      const LabelledGraph& g = alg_.graph();
      auto tokens = split_word_text(g, body);
      std::vector<std::string> unknown;
      auto w = resolve_word(g, tokens, &unknown);
      if (!w) {
        if (!unknown.empty()) fail("unknown symbol '" + unknown.front() + "'");
        fail("empty word in s()");
      }
      std::vector<SymbolId> word(w->symbols().begin(), w->symbols().end());
      return {false, {}, alg_.partial_isometry(std::move(word))};
    }
    if (accept_word("p")) {
      const std::string_view body = trim(until_close());
      VertexSet a;
      try {
        a = parse_set(alg_.graph(), body);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      return {false, {}, alg_.projection(a)};
    }
    if (accept_word("i")) return {true, Coeff::i(), {}};
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  const TermAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermSum evaluate_term(const TermAlgebra& algebra, std::string_view text) {
  return Parser(algebra, text).run();
}

}  // namespace lgraph
