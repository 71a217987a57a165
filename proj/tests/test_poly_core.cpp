#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boreldegen/parse.hpp"
#include "boreldegen/polynomial.hpp"
#include <random>

using namespace boreldegen;

static FieldElem rand_elem(std::mt19937& rng, bool ext) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return {ratio(num(rng), den(rng)), ext ? ratio(num(rng), den(rng)) : Rational(0)};
}

TEST_CASE("field axioms over Q and Q(sqrt 7)") {
    std::mt19937 rng(12345);
    for (long rad : {0L, 7L, 2L}) {
        Field F{rad};
        for (int it = 0; it < 200; ++it) {
            FieldElem a = rand_elem(rng, rad != 0);
            FieldElem b = rand_elem(rng, rad != 0);
            FieldElem c = rand_elem(rng, rad != 0);
            CHECK(fadd(a, b) == fadd(b, a));
            CHECK(fmul(a, b, F) == fmul(b, a, F));
            CHECK(fmul(fmul(a, b, F), c, F) == fmul(a, fmul(b, c, F), F));
            CHECK(fmul(a, fadd(b, c), F) == fadd(fmul(a, b, F), fmul(a, c, F)));
            CHECK(fsub(a, a).is_zero());
            if (!a.is_zero()) {
                CHECK(fmul(a, finv(a, F), F) == FieldElem(1));
                CHECK(fdiv(fmul(a, b, F), a, F) == b);
            }
        }
    }
}

TEST_CASE("quadratic extension inverse") {
    Field F{7};
    // (3 + sqrt7)^-1 = (3 - sqrt7)/2
    FieldElem x(Rational(3), Rational(1));
    FieldElem xi = finv(x, F);
    CHECK(xi == FieldElem(ratio(3, 2), ratio(-1, 2)));
    CHECK(fmul(FieldElem(Rational(0), Rational(1)), FieldElem(Rational(0), Rational(1)), F) ==
          FieldElem(7));
}

TEST_CASE("monomial arithmetic") {
    Monomial a({2, 0, 1, 0}), b({1, 3, 0, 2});
    CHECK((a * b).e == std::vector<int>{3, 3, 1, 2});
    CHECK(Monomial::lcm(a, b).e == std::vector<int>{2, 3, 1, 2});
    CHECK(Monomial::gcd(a, b).e == std::vector<int>{1, 0, 0, 0});
    CHECK((a * b).div(b) == a);
    CHECK(Monomial::lcm(a, b) * Monomial::gcd(a, b) == a * b); // lcm*gcd == product
    CHECK(a.degree() == 3);
    CHECK(b.divides(a * b));
    CHECK(!b.divides(a));
}

TEST_CASE("term order globality and validity") {
    CHECK_THROWS(TermOrder(2, {{1, 1}, {2, 2}}));             // rank deficient
    CHECK_THROWS(TermOrder(2, {{1, -1}, {0, 1}}));            // column sign
    CHECK_NOTHROW(TermOrder::bracket({43, 9, 2, 1}));
    CHECK_NOTHROW(TermOrder::m_order({14, 2, 0, 0, 0, 0, 2, 1}));
    CHECK_NOTHROW(TermOrder::m_order({14, 2, 0, 0, 0, 0, 1, -1}));
    // 1 is the least monomial under every valid order
    for (auto& o : {TermOrder::lex(4), TermOrder::degrevlex(4), TermOrder::grlex(4),
                    TermOrder::bracket({43, 9, 2, 1})}) {
        Monomial one = Monomial::one(4);
        for (auto& m : monomials_of_degree(4, 3))
            CHECK(o.greater(m, one));
    }
}

TEST_CASE("order comparisons frozen examples") {
    Ring R = Ring::rationals(4);
    auto lex = TermOrder::lex(4), drl = TermOrder::degrevlex(4);
    Monomial y4 = parse_monomial(R, "y^4"), xz3 = parse_monomial(R, "x*z^3");
    CHECK(lex.greater(xz3, y4));
    CHECK(drl.greater(y4, xz3));
    Polynomial p = parse_polynomial(R, "y^4 + x*z^3");
    CHECK(p.leading_term(lex).first == xz3);
    CHECK(p.leading_term(drl).first == y4);
    // weight row dominates after total degree
    auto br = TermOrder::bracket({43, 9, 2, 1});
    CHECK(br.greater(parse_monomial(R, "x*z^4"), parse_monomial(R, "y^5")));
    CHECK(br.greater(parse_monomial(R, "y^3*w^2"), parse_monomial(R, "z^4*w")));
    CHECK(br.greater(parse_monomial(R, "z^9*w^9"), parse_monomial(R, "y^2"))); // degree first
    // multiplicative: a > b implies ac > bc (random spot check)
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 4);
    for (int it = 0; it < 100; ++it) {
        Monomial a({d(rng), d(rng), d(rng), d(rng)}), b({d(rng), d(rng), d(rng), d(rng)}),
            c({d(rng), d(rng), d(rng), d(rng)});
        for (auto& o : {lex, drl, br})
            CHECK(o.compare(a, b) == o.compare(a * c, b * c));
    }
}

TEST_CASE("polynomial ring operations") {
    Ring R = Ring::rationals(4);
    Polynomial f = parse_polynomial(R, "x^2 - 2*x*y + y^2");
    Polynomial g = parse_polynomial(R, "x - y");
    CHECK(f == g * g);
    CHECK((f - g * g).is_zero());
    CHECK(f.is_homogeneous());
    CHECK(!parse_polynomial(R, "x^2 + y").is_homogeneous());
    CHECK(f.degree() == 2);
    Polynomial h = parse_polynomial(R, "1127/64*w^3*z^2 - z^5");
    CHECK(h.coeff(parse_monomial(R, "z^2*w^3")) == FieldElem(ratio(1127, 64)));
    // substitution: w -> w + 3z in z*w
    Polynomial zw = parse_polynomial(R, "z*w");
    Polynomial sub = zw.substitute(3, parse_polynomial(R, "w + 3*z"));
    CHECK(sub == parse_polynomial(R, "z*w + 3*z^2"));
}

TEST_CASE("parser round trips") {
    Ring R = Ring::rationals(4);
    for (const char* s : {"x^2 - 2*x*y + y^2", "0", "-x + 5/3*y*z^2*w", "1",
                          "y^2*z^3 - w^3*z^2 + z^5 + 2*w*z^3*y + w^2*z*y^2"}) {
        Polynomial p = parse_polynomial(R, s);
        CHECK(parse_polynomial(R, p.to_string()) == p);
    }
    Ring E = Ring::quadratic(4, 7);
    Polynomial q = parse_polynomial(E, "y^2*z^3 - w*z^2*y^2 + 2*w*z^3*y*sqrt(7) + 4*w^2*z*y^2 + 7*z^5");
    CHECK(q.coeff(parse_monomial(E, "y*z^3*w")) == FieldElem(Rational(0), Rational(2)));
    CHECK(parse_polynomial(E, q.to_string()) == q);
    CHECK_THROWS(parse_polynomial(R, "x + sqrt(7)"));
    CHECK_THROWS(parse_polynomial(R, "x + q"));
    CHECK_THROWS(parse_polynomial(R, "x ++ y"));
}

TEST_CASE("ideal and order parsing") {
    Ring R = Ring::rationals(4);
    MonomialIdeal I = parse_monomial_ideal(R, "x^2, x*y^3, y^6");
    CHECK(I.gens.size() == 3);
    CHECK(I == parse_monomial_ideal(R, "(y^6, x*y^3, x^2, x^2*y)"));
    auto o1 = parse_term_order(4, "bracket(43,9,2,1)");
    auto o2 = parse_term_order(4, "matrix([[1,1,1,1],[43,9,2,1],[0,0,-1,0],[0,-1,0,0]])");
    for (auto& a : monomials_of_degree(4, 4))
        for (auto& b : monomials_of_degree(4, 4))
            CHECK(o1.compare(a, b) == o2.compare(a, b));
    CHECK_THROWS(parse_term_order(4, "mystery"));
}

TEST_CASE("hilbert polynomial parsing") {
    CHECK(parse_hilbert_polynomial("5t-2") == HilbertPolynomial::linear(5, -2));
    CHECK(parse_hilbert_polynomial("9t-12") == HilbertPolynomial::linear(9, -12));
    CHECK(parse_hilbert_polynomial("t") == HilbertPolynomial::linear(1, 0));
    CHECK(parse_hilbert_polynomial("3t+1") == HilbertPolynomial::linear(3, 1));
    CHECK(parse_hilbert_polynomial("7") == HilbertPolynomial::linear(0, 7));
    CHECK(parse_hilbert_polynomial("[-2,5]") == HilbertPolynomial::linear(5, -2));
    CHECK(parse_hilbert_polynomial("5t-2").eval(10) == 48);
}
