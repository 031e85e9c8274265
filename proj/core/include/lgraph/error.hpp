#ifndef LGRAPH_ERROR_HPP
#define LGRAPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgraph {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when the error is not tied
/// to a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is well formed but violates a hypothesis an operation relies on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph has a vertex without outgoing edges.
class SinkError : public PreconditionError {
 public:
  explicit SinkError(const std::string& vertex)
      : PreconditionError("vertex '" + vertex + "' is a sink (no outgoing edges)"),
        vertex_(vertex) {}

  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

}  // namespace lgraph

#endif  // LGRAPH_ERROR_HPP
