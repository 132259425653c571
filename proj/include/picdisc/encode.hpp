#pragma once

#include <string>

#include "picdisc/graded.hpp"
#include "picdisc/laurent.hpp"
#include "picdisc/padic.hpp"
#include "picdisc/trunc.hpp"

namespace picdisc {

/*
 * Canonical text form. Finite-field coefficients print as their integer
 * codes (base-p digit value). Laurent terms are c, c*t^e, c*t^e*z^j joined
 * by " + " in exponent order; truncation coefficients attach *T^j with
 * parentheses around multi-term coefficients. Ramified coefficients use
 * integers, pi^k and z^j under the same conventions.
 */
std::string format_laurent(const LaurentPoly& f);
std::string format_trunc(const TruncElem<LaurentPoly>& c);
std::string format_tate(const TateElem& a);

LaurentPoly parse_laurent(const std::string& text, const FieldPtr& fld);
TruncElem<LaurentPoly> parse_trunc(const std::string& text, const FieldPtr& fld,
                                   std::size_t rank);
TateElem parse_tate(const std::string& text, const RFieldPtr& fld);
RamifiedElem parse_ramified(const std::string& text, const RFieldPtr& fld);

} // namespace picdisc
