#ifndef CONTINUUM_EXPR_HPP
#define CONTINUUM_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "continuum/pseudopoint.hpp"

namespace continuum {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Evaluates an expression over rational literals ("a/b"), unit references
// e[a1,...,an], unary minus, +, -, and non-commutative left-associative *
// (binding tighter than + and -). Whitespace is insignificant.
// Throws ParseError on bad syntax, std::invalid_argument on a unit whose
// arity differs from `dim`.
PseudoPoint eval_pseudo_expr(std::string_view text, std::size_t dim, const TwistConfig& twist = {});

}  // namespace continuum

#endif
