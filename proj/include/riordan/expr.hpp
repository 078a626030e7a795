#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "riordan/series.hpp"

namespace riordan {

/// Abstract syntax of the series expression grammar:
///
///   expr     := term (('+' | '-') term)*
///   term     := factor (('*' | '/') factor)*
///   factor   := atom ('^' uint)?
///   atom     := rational | 'x' | '(' expr ')' | 'rev' '(' expr ')' | '-' atom
///   rational := uint ('/' uint)?
///
/// Left-associative; '^' binds tightest; whitespace is insignificant.
struct SeriesExpr {
    enum class Kind { Number, X, Neg, Add, Sub, Mul, Div, Pow, Rev };

    Kind kind;
    Rat value;                           ///< Number
    std::unique_ptr<SeriesExpr> lhs;     ///< unary operand or left operand
    std::unique_ptr<SeriesExpr> rhs;     ///< right operand of a binary node
    std::uint32_t exponent = 0;          ///< Pow
    std::size_t pos = 0;                 ///< byte offset in the source text
};

using ExprPtr = std::unique_ptr<SeriesExpr>;

/// Throws ParseError (offset + expected-token set) on malformed input.
ExprPtr parse_series_expr(std::string_view text);

/// Canonical text; reparsing it yields a structurally identical tree.
std::string render_expr(const SeriesExpr& e);

bool expr_equal(const SeriesExpr& a, const SeriesExpr& b);

/// Exact evaluation at truncation order N. Division by a series of
/// positive order loses representable orders, so evaluation happens at an
/// internally padded order and is re-truncated to exactly N; intermediate
/// operands of different orders are explicitly re-truncated to the minimum.
/// fps errors are propagated with the source offset of the failing node.
Series<Rat> eval_expr(const SeriesExpr& e, int order);

Series<Rat> eval_expr(std::string_view text, int order);

} // namespace riordan
