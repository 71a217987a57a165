#pragma once
#include "groebner.hpp"
#include "lp.hpp"
#include "monomial_ideal.hpp"
#include "term_order.hpp"
#include <optional>

namespace boreldegen {

// Weight vector plus a full term order (degree-first, then the weights)
// under which the degree-t piece of the ideal is the top segment of the
// degree-t monomials.
struct SegmentOrder {
    std::vector<long> weights;
    TermOrder order;
};

std::optional<SegmentOrder> is_segment(const MonomialIdeal& J, int t);

// A triple (u, m1, m2) with u outside J_t, m1 and m2 inside, and
// u^2 = m1 * m2; it rules out every segment order at degree t.
struct ProductObstruction {
    Monomial u, m1, m2;
};

std::optional<ProductObstruction> non_segment_certificate(const MonomialIdeal& J, int t);

// hilbert: segment at the Gotzmann number of the quotient Hilbert
// polynomial; reg: segment at the regularity; at: segment at some degree
// `t` between the maximal generator degree and regularity-1.
enum class SegmentKind { hilbert, reg, at, none };
struct SegmentClass {
    SegmentKind kind = SegmentKind::none;
    int t = -1; // meaningful for kind == at
};

SegmentClass classify_segment(const MonomialIdeal& J);

// The coordinate of the degree-t piece of I on the monomial set J_t in
// the Pluecker embedding: build a basis of I_t, keep the J_t columns,
// test the determinant.  Requires dim I_t == dim J_t.
bool pluecker_nonzero(const PolynomialIdeal& I, const MonomialIdeal& J, int t);

// Certified when J_t is a segment and the Pluecker coordinate of I_s on
// J_s is nonzero; then I degenerates to a scheme with saturated initial
// ideal J, so both lie on a common component.
bool component_certificate(const PolynomialIdeal& I, const MonomialIdeal& J, int s, int t);

} // namespace boreldegen
