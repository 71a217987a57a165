#pragma once
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"
#include <string>

namespace boreldegen {

// Grammar: sum of terms; term = optional sign, factors joined by '*'.
// Factor = integer | integer/integer | sqrt(d) | name | name^exp.
// Whitespace is ignored.  Variable names come from the ring.
Polynomial parse_polynomial(const Ring& r, const std::string& text);
Monomial parse_monomial(const Ring& r, const std::string& text);
// Comma-separated monomials.
MonomialIdeal parse_monomial_ideal(const Ring& r, const std::string& text);
// lex | drl (degrevlex) | grlex | bracket(v1,v2,v3,v4) | M(v1,...,v8)
// | matrix([[...],[...],...]); nvars is the ambient variable count.
TermOrder parse_term_order(int nvars, const std::string& text);
// "5t-2", "9t-12", "t", "7", or "[c0,c1,...]".
HilbertPolynomial parse_hilbert_polynomial(const std::string& text);

} // namespace boreldegen
