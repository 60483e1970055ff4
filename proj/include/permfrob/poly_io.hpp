#pragma once

// Text form of polynomials:
//   poly   ::= term {("+" | "-") term} | "0"
//   term   ::= factor {"*" factor}
//   factor ::= integer | varname ["^" integer]
// Coefficients are reduced mod p; whitespace is ignored. Rendering emits the
// canonical graded-lex term order, "c*" only when c != 1, and " + " between terms.

#include <string>
#include <string_view>

#include "permfrob/poly.hpp"

namespace permfrob {

/// Throws ParseError (with position) on malformed input or unknown variables.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

std::string render_poly(const Polynomial& poly);
std::string render_monomial(const Monomial& m, const VariableSpace& vars);

}  // namespace permfrob
