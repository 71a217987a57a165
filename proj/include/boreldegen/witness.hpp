#pragma once
#include "groebner.hpp"
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace boreldegen {

// (x^2, x y^l, x F + y^(l+m)) for homogeneous F of degree l+m-1 in y,z,w
// with y-exponent < l.
PolynomialIdeal minor_ideal(int l, int m, const Polynomial& F);

struct WitnessResult {
    bool verified = false;
    MonomialIdeal initial;   // initial ideal of the minor ideal
    MonomialIdeal saturated; // its saturation
};

WitnessResult verify_witness(int l, int m, const Polynomial& F, const TermOrder& o,
                             const MonomialIdeal& target);

// The monomials y^(l-1-i) z^a w^b of degree l+m-1 (i = 0..l-1, a+b = m+i)
// indexing the coefficient variables of a generic F, in a fixed order.
std::vector<Monomial> generic_f_support(int l, int m);

// Polynomial system over the coefficient variables of a generic F whose
// solutions yield ideals with the requested initial ideal: produced by a
// Buchberger run with symbolic coefficients.  Leading coefficients q over
// monomials inside the target are declared invertible (fresh variable c
// with c*q = 1); over monomials outside, q = 0 is emitted and the term
// dropped.  A nonzero constant forced to vanish marks the system
// inconsistent.
struct ConstraintSystem {
    Ring cring;     // coefficient variables first, inverse variables after
    int n_base = 0; // number of coefficient variables
    std::vector<Polynomial> equalities;               // q(c) = 0
    std::vector<std::pair<int, Polynomial>> inverses; // (k, q): c_k * q = 1
    bool inconsistent = false;
    bool budget_exhausted = false;
    bool achieved = false; // lead ideal saturates to the target
};

ConstraintSystem generate_constraints(int l, int m, const MonomialIdeal& target,
                                      const TermOrder& o, int budget);

// Substitute values for the coefficient variables, derive each inverse
// variable in order (false if its q vanishes), then test every equality.
bool check_assignment(const ConstraintSystem& sys, const std::vector<FieldElem>& base_values);

// Seeded random search: integer coefficients in [-20, 20] on the generic
// support, accepted when verify_witness succeeds.
std::optional<Polynomial> heuristic_solve(int l, int m, const MonomialIdeal& target,
                                          const TermOrder& o, uint64_t seed, int tries);

} // namespace boreldegen
