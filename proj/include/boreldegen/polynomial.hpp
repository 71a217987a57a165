#pragma once
#include "field.hpp"
#include "monomial.hpp"
#include "term_order.hpp"
#include <map>
#include <string>
#include <vector>

namespace boreldegen {

struct Ring {
    int nvars = 0;
    Field field;
    std::vector<std::string> names;

    static std::vector<std::string> default_names(int nvars);
    static Ring rationals(int nvars);
    static Ring rationals(int nvars, std::vector<std::string> names);
    static Ring quadratic(int nvars, long radicand);

    bool compatible(const Ring& o) const {
        return nvars == o.nvars && field == o.field;
    }
    bool operator==(const Ring& o) const { return compatible(o) && names == o.names; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElem, CanonicalGreater>;

    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, const FieldElem& c);
    static Polynomial term(const Ring& r, const Monomial& m, const FieldElem& c);
    static Polynomial monomial(const Ring& r, const Monomial& m) { return term(r, m, FieldElem(1)); }
    static Polynomial variable(const Ring& r, int i, int pow = 1) {
        return monomial(r, Monomial::var(r.nvars, i, pow));
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t nterms() const { return terms_.size(); }
    int degree() const; // max term degree, -1 for zero
    bool is_homogeneous() const;
    FieldElem coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const FieldElem& c); // in place
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_term(const Monomial& m, const FieldElem& c) const;
    bool operator==(const Polynomial& o) const {
        return ring_.compatible(o.ring_) && terms_ == o.terms_;
    }

    std::pair<Monomial, FieldElem> leading_term(const TermOrder& o) const; // throws on zero
    Polynomial monic(const TermOrder& o) const;

    // substitute variable i by a polynomial (same ring)
    Polynomial substitute(int var, const Polynomial& value) const;
    // map into another ring: newvar[i] = image position of old var i, or -1
    // meaning the old variable must not occur.
    Polynomial map_vars(const Ring& target, const std::vector<int>& image) const;

    std::string to_string() const;

private:
    Ring ring_;
    TermMap terms_;
};

std::string monomial_to_string(const Monomial& m, const Ring& r);

} // namespace boreldegen
