#pragma once

#include "apsum/numutil.hpp"

#include <map>
#include <string>
#include <string_view>

namespace apsum {

using Bindings = std::map<std::string, Natural, std::less<>>;

/// Exact integer expressions over named values, used by the check registry:
///   expr := term (('+' | '-') term)*
///   term := unary ('*' unary)*
///   unary := '-' unary | primary ('^' unary)?
///   primary := integer | name | '(' expr ')'
/// Exponents must evaluate to an integer in [0, 100000].
Natural eval_expr(std::string_view text, const Bindings& names);

/// Either `expr REL expr` with REL in {=, ==, !=, <, <=, >, >=}, or
/// `ispow(base, expr)` which holds when expr = base^e for some e >= 0.
bool eval_assertion(std::string_view text, const Bindings& names);

}  // namespace apsum
