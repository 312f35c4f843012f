#pragma once

#include <string>

#include "supertime/actions.hpp"

namespace supertime {

/// Parses an expression in the artifact grammar (see docs/grammar.ebnf):
/// infix +, -, *, /, integer ^ powers, parentheses; `i`, `sqrt2`, `theta`,
/// `thetabar` reserved; `'` suffixes name jets. Throws SyntaxError with
/// 1-based line/column, UnknownSymbol for unregistered names.
SuperNumber parse_expr(const Session& s, const std::string& src);

/// Parses a 3x3 matrix literal [[..],[..],[..]] laid out as the vierbein
/// rows (t, theta, thetabar); each slot is parity-checked. Throws
/// ParityMismatch naming the offending slot.
VierbeinParams parse_vierbein(const Session& s, const std::string& src);

}  // namespace supertime
