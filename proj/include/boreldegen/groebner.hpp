#pragma once
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"
#include <cstdint>
#include <vector>

namespace boreldegen {

struct PolynomialIdeal {
    Ring ring;
    std::vector<Polynomial> gens;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& o);
// Full remainder of f modulo G (no term of the result is divisible by any LT(g)).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& o);

// Reduced Groebner basis, elements monic, sorted by leading term ascending.
std::vector<Polynomial> buchberger(const PolynomialIdeal& I, const TermOrder& o);

MonomialIdeal initial_ideal(const PolynomialIdeal& I, const TermOrder& o);
MonomialIdeal initial_ideal(const std::vector<Polynomial>& groebner_basis, const Ring& r,
                            const TermOrder& o);

// I : f^inf, computed with an auxiliary inverse variable and elimination.
PolynomialIdeal saturate_by(const PolynomialIdeal& I, const Polynomial& f);

// Limit at u = 0 of a flat family over k[u]; the first variable of I's
// ring must be the parameter u.  The family is first saturated by u.
struct FlatLimit {
    bool monomial = false;
    MonomialIdeal ideal;               // valid when monomial
    std::vector<Polynomial> basis;     // reduced degrevlex basis of the limit
    Ring ring;                         // base ring (u removed)
};
FlatLimit flat_limit(const PolynomialIdeal& I_with_u);

// Generic coordinate change w -> w + a*z followed by the initial ideal
// under a degree order with z ahead of w; computed twice with independent
// random a and two different orders, which must agree.
MonomialIdeal z_transform(const MonomialIdeal& I, uint64_t seed);

// helpers for moving polynomials across rings
Ring ring_with_front_var(const Ring& r, const std::string& name);
Polynomial lift_front(const Polynomial& p, const Ring& target); // add one leading variable
Polynomial drop_front(const Polynomial& p, const Ring& target); // first-var exponents must be 0

} // namespace boreldegen
