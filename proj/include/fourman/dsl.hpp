#pragma once

#include "fourman/expr.hpp"
#include "fourman/geography.hpp"
#include "fourman/registry.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace fourman {

using DslValue = std::variant<Expr, BkQuery, GeographyQuery>;

/// expr := term ('#' term)* ; term := [INT '*'] atom ;
/// atom := NAME ['(' args ')'] | '(' expr ')' | cover(..) | bicyclic(..) | quotient(..) | fibersum(..) | logt(..)
/// Queries: bk(eps=.., c=.., bounds=(x,y)) and free_actions(d=.., eps=.., c=.., bounds=(n,m)).
DslValue parse_dsl(std::string_view text, const PrimitiveRegistry& registry = default_registry());

/// Parses an expression; queries are rejected with a SyntaxError.
Expr parse_expr(std::string_view text, const PrimitiveRegistry& registry = default_registry());

/// Source text that parses back to an identical tree.
std::string print(const Expr& expr);
std::string print(const BkQuery& q);
std::string print(const GeographyQuery& q);

/// Human form for canonical sums: "15 CP2 # 77 CP2b".
std::string print_plain(const Expr& expr);

} // namespace fourman
