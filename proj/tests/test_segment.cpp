#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boreldegen/acm.hpp"
#include "boreldegen/borel_enum.hpp"
#include "boreldegen/parse.hpp"
#include "boreldegen/segment.hpp"

using namespace boreldegen;

static Ring R4 = Ring::rationals(4);
static MonomialIdeal mi(const std::string& s) { return parse_monomial_ideal(R4, s); }

TEST_CASE("strict_feasible solves and refutes small systems") {
    auto w = strict_feasible({{{1, -1}}});
    REQUIRE(w);
    CHECK((*w)[0] - (*w)[1] >= 1);
    CHECK(!strict_feasible({{{1, -1}, {-1, 1}}}));
    auto w2 = strict_feasible({{{2, -1, 0}, {0, 1, -3}, {-1, 0, 2}}});
    REQUIRE(w2);
    CHECK(2 * (*w2)[0] - (*w2)[1] >= 1);
    CHECK((*w2)[1] - 3 * (*w2)[2] >= 1);
    CHECK(-(*w2)[0] + 2 * (*w2)[2] >= 1);
    CHECK(strict_feasible({}).has_value());
}

static long wval(const std::vector<long>& w, const Monomial& m) {
    long v = 0;
    for (size_t i = 0; i < w.size(); ++i) v += w[i] * m.e[i];
    return v;
}

static void check_separates(const MonomialIdeal& J, int t, const std::vector<long>& w) {
    bool have_in = false, have_out = false;
    long min_in = 0, max_out = 0;
    for (const Monomial& m : monomials_of_degree(J.nvars, t)) {
        long v = wval(w, m);
        if (J.contains(m)) {
            if (!have_in || v < min_in) min_in = v;
            have_in = true;
        } else {
            if (!have_out || v > max_out) max_out = v;
            have_out = true;
        }
    }
    if (have_in && have_out) CHECK(min_in > max_out);
}

TEST_CASE("degree pieces of lex ideals are segments") {
    MonomialIdeal L = mi("x^2, x*y, y^4");
    for (int t = 2; t <= 8; ++t) {
        auto s = is_segment(L, t);
        REQUIRE(s);
        check_separates(L, t, s->weights);
    }
    // trivial pieces: empty and full
    CHECK(is_segment(mi("x^3"), 1));
    CHECK(is_segment(MonomialIdeal::make(4, {Monomial::one(4)}), 3));
}

TEST_CASE("the published product obstruction rules out one catalogue entry") {
    MonomialIdeal j85 = mi("x^2, x*y^2, x*y*z^4, x*z^5, y^7");
    CHECK(!is_segment(j85, 7));
    auto cert = non_segment_certificate(j85, 7);
    REQUIRE(cert);
    CHECK(!j85.contains(cert->u));
    CHECK(j85.contains(cert->m1));
    CHECK(j85.contains(cert->m2));
    for (int i = 0; i < 4; ++i)
        CHECK(2 * cert->u.e[i] == cert->m1.e[i] + cert->m2.e[i]);
    // the unpadded triple behind it
    Ring r = R4;
    Monomial u = parse_monomial(r, "x*y*z^3");
    CHECK(!j85.contains(u));
    CHECK(j85.contains(parse_monomial(r, "x*y^2*z")));
    CHECK(j85.contains(parse_monomial(r, "x*z^5")));
}

TEST_CASE("certificates and segment orders never coexist") {
    BorelCatalog cat = enumerate_saturated_borel(HilbertPolynomial::linear(5, -2), 4);
    for (const auto& J : cat.entries) {
        int t = (int)regularity_borel(J);
        bool seg = is_segment(J, t).has_value();
        bool cert = non_segment_certificate(J, t).has_value();
        CHECK(!(seg && cert));
    }
}

TEST_CASE("segment classification across the degree-7 genus-5 survivors") {
    FilterResult f = filter_candidates(3, 1);
    REQUIRE(f.catalog.entries.size() == 112);
    std::vector<MonomialIdeal> nonsegment = {
        mi("x^2, x*y^3, x*y^2*z, x*y*z^2, x*z^6, y^7"),
        mi("x^2, x*y^2, x*y*z^4, x*z^5, y^7"),
        mi("x^2, x*y^3, x*y^2*z, x*y*z^2, y^6*z, y^7"),
        // the base ladder ideal itself: (x*y^2*w)^2 = x^2*w^2 * y^4
        mi("x^2, x*y^3, y^4"),
    };
    REQUIRE(non_segment_certificate(mi("x^2, x*y^3, y^4"), 4));
    bool saw_reg9 = false;
    for (const auto& J : f.passing) {
        SegmentClass c = classify_segment(J);
        bool expected_none =
            std::find(nonsegment.begin(), nonsegment.end(), J) != nonsegment.end();
        CHECK((c.kind == SegmentKind::none) == expected_none);
        if (c.kind == SegmentKind::reg && c.t == 9) saw_reg9 = true;
    }
    CHECK(saw_reg9);
    CHECK(classify_segment(lex_segment_ideal(HilbertPolynomial::linear(7, -5), 4)).kind ==
          SegmentKind::hilbert);
}

TEST_CASE("segments persist downward") {
    MonomialIdeal j29 = mi("x^2, x*y^2, x*y*z^2, y^5");
    auto s5 = is_segment(j29, 5);
    REQUIRE(s5);
    check_separates(j29, 5, s5->weights);
    CHECK(!non_segment_certificate(j29, 5));
    for (int t = 2; t < 5; ++t) CHECK(is_segment(j29, t));
}

TEST_CASE("segment orders sort the ideal piece to the top") {
    MonomialIdeal j5 = mi("x^2, x*y, x*z^3, y^5");
    auto s = is_segment(j5, 5);
    REQUIRE(s);
    const TermOrder& o = s->order;
    auto mons = monomials_of_degree(4, 5);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
    long k = hf_ideal(j5, 5);
    for (long i = 0; i < (long)mons.size(); ++i) CHECK(j5.contains(mons[i]) == (i < k));
}

TEST_CASE("pluecker coordinates") {
    MonomialIdeal j7 = mi("x^2, x*y, y^4");
    PolynomialIdeal I{R4, {parse_polynomial(R4, "x^2"), parse_polynomial(R4, "x*y"),
                           parse_polynomial(R4, "y^4 + x*z^3")}};
    PolynomialIdeal Imono{R4, {parse_polynomial(R4, "x^2"), parse_polynomial(R4, "x*y"),
                               parse_polynomial(R4, "y^4")}};
    CHECK(pluecker_nonzero(Imono, j7, 4));
    CHECK(pluecker_nonzero(I, j7, 4));
    MonomialIdeal j5 = mi("x^2, x*y, x*z^3, y^5");
    CHECK(pluecker_nonzero(I, j5, 5));
    CHECK(!pluecker_nonzero(Imono, j5, 5));
    CHECK_THROWS(pluecker_nonzero(I, mi("x, y^2"), 4));
}

TEST_CASE("component certificates") {
    MonomialIdeal j5 = mi("x^2, x*y, x*z^3, y^5");
    PolynomialIdeal I{R4, {parse_polynomial(R4, "x^2"), parse_polynomial(R4, "x*y"),
                           parse_polynomial(R4, "y^4 + x*z^3")}};
    CHECK(component_certificate(I, j5, 5, 5));
    PolynomialIdeal Imono{R4, {parse_polynomial(R4, "x^2"), parse_polynomial(R4, "x*y"),
                               parse_polynomial(R4, "y^4")}};
    CHECK(!component_certificate(Imono, j5, 5, 5));
    MonomialIdeal j85 = mi("x^2, x*y^2, x*y*z^4, x*z^5, y^7");
    PolynomialIdeal any{R4, {parse_polynomial(R4, "x^2")}};
    CHECK(!component_certificate(any, j85, 7, 7));
}
