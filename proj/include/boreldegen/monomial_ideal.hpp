#pragma once
#include "field.hpp"
#include "monomial.hpp"
#include <string>
#include <vector>

namespace boreldegen {

struct Ring;

// Polynomial in one variable t with rational coefficients, used for
// Hilbert polynomials.  coeffs[i] is the coefficient of t^i.
struct HilbertPolynomial {
    std::vector<Rational> coeffs;

    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }
    static HilbertPolynomial linear(long d, long c) {
        return HilbertPolynomial({Rational(c), Rational(d)});
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return (int)coeffs.size() - 1; } // -1 for zero
    Rational eval(long t) const;
    bool operator==(const HilbertPolynomial&) const = default;
    HilbertPolynomial operator-(const HilbertPolynomial& o) const;
    std::string to_string() const;
};

// Monomial ideal with a minimal generator list kept sorted descending in
// the canonical (graded lex) order.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;

    static MonomialIdeal make(int nvars, std::vector<Monomial> gens);
    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& o) const;
    bool operator==(const MonomialIdeal&) const = default;
    int max_gen_degree() const;
    std::string to_string(const Ring& r) const;
    std::string to_string() const;
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Strongly stable test: for each generator and each variable x_j dividing
// it, x_i/x_j * m must lie in the ideal for all i < j.  Checking adjacent
// moves (j-1 <- j) suffices and is what we do.
bool is_borel_fixed(const MonomialIdeal& I);
MonomialIdeal borel_closure(const MonomialIdeal& I);

// Saturation with respect to the irrelevant ideal: intersection over all
// variables of (I : x_i^inf).
MonomialIdeal saturation(const MonomialIdeal& I);
MonomialIdeal monomial_intersection(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal colon_var_power(const MonomialIdeal& I, int var);

// x^a y^b z^c1 w^c2 -> x^a y^b z^(c1+c2); requires nvars == 4.
MonomialIdeal z_transform_image(const MonomialIdeal& I);

// Number of degree-d monomials in I / in the quotient ring.
long hf_ideal(const MonomialIdeal& I, int d);
long hf_quotient(const MonomialIdeal& I, int d);
long hf_ideal_enumerate(const MonomialIdeal& I, int d); // oracle, O(#monomials)

HilbertPolynomial hilbert_polynomial_quotient(const MonomialIdeal& I);

// Smallest degree from which Macaulay/Gotzmann persistence is guaranteed
// for the given (quotient) Hilbert polynomial.  Throws if p is not the
// Hilbert polynomial of any subscheme.
long gotzmann_number(const HilbertPolynomial& p);

long regularity_borel(const MonomialIdeal& I); // max generator degree

// Saturated lex-segment ideal with quotient Hilbert polynomial p, in
// nvars variables (projective space of dimension nvars-1); deg p <= 1.
MonomialIdeal lex_segment_ideal(const HilbertPolynomial& p, int nvars);

long binom(long n, long k);

// All degree-d monomials in `nvars` variables, descending canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace boreldegen
