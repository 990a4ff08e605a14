#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "progressio/finite_group.hpp"

namespace progressio {

/// Parse tree for group references:
///
///   Expr := Name '(' IntList ')' | 'DP' '(' Expr ',' Expr ')' | 'Q8'
///
/// with Name one of C, ElemAb, S, A, NonAbPQ, Frob, Heis, ModMax
/// (case-sensitive). Whitespace between tokens is ignored.
struct GroupExpr {
  std::string name;
  std::vector<std::uint64_t> args;
  std::vector<GroupExpr> operands;

  friend bool operator==(GroupExpr const&, GroupExpr const&) = default;
};

/// Throws ParseError carrying the 0-based column of the offending token.
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text: no whitespace, e.g. "DP(C(3),Frob(5,3))".
std::string render(GroupExpr const& expr);

/// Dispatch to the constructors. Precondition violations are rethrown as
/// PreconditionError prefixed with the offending sub-expression.
FiniteGroup build(GroupExpr const& expr, std::size_t cap = kDefaultClosureCap);

/// Closed-form order, without building anything. Saturates on overflow.
std::uint64_t expected_order(GroupExpr const& expr);

}  // namespace progressio
