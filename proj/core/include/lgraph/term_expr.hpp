#ifndef LGRAPH_TERM_EXPR_HPP
#define LGRAPH_TERM_EXPR_HPP

#include <string_view>

#include "lgraph/term.hpp"

namespace lgraph {

/// Evaluates an expression over the generators of `algebra`.
///
///   expr    := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | atom
///   atom    := NUMBER ('/' NUMBER)? | 'i' | 's(' word ')' | 'p(' set ')'
///            | 'adj(' expr ')' | '(' expr ')'
///
/// Words use the DSL symbol names ('.'-separated unless every symbol is a
/// single character); sets are written {v1,v2}. Scalars may only appear as
/// factors of a product. Throws ParseError (with the column in the message)
/// and PreconditionError for sets outside the accommodating set.
TermSum evaluate_term(const TermAlgebra& algebra, std::string_view text);

}  // namespace lgraph

#endif  // LGRAPH_TERM_EXPR_HPP
