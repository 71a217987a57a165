#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boreldegen/acm.hpp"
#include "boreldegen/parse.hpp"
#include <algorithm>

using namespace boreldegen;

static Ring R4 = Ring::rationals(4);
static MonomialIdeal mi(const std::string& s) { return parse_monomial_ideal(R4, s); }

static bool in_list(const std::vector<MonomialIdeal>& v, const MonomialIdeal& J) {
    return std::find(v.begin(), v.end(), J) != v.end();
}

TEST_CASE("j_ab builds the two-column ladder ideals") {
    CHECK(j_ab(AcmBorelSpec{2, {1, 2}}, 4) == mi("x^2, x*y, y^2"));
    CHECK(j_ab(AcmBorelSpec{1, {1}}, 4) == mi("x, y"));
    CHECK(quadric_acm_ideal(2, 2) == mi("x^2, x*y^2, y^4"));
    CHECK(quadric_acm_ideal(1, 3) == mi("x^2, x*y, y^4"));
    CHECK_THROWS(j_ab(AcmBorelSpec{2, {2, 2}}, 4));
    CHECK_THROWS(j_ab(AcmBorelSpec{2, {2, 1}}, 4));
}

TEST_CASE("candidate_ideal realizes the generator shape") {
    QuadricCandidateSpec s22{2, 2, 2, {5, 1}, {}};
    CHECK(candidate_ideal(s22) == mi("x^2, x*y^2, x*y*z, y^6, x*z^5"));
    QuadricCandidateSpec s28{2, 2, 1, {1}, {1}};
    CHECK(candidate_ideal(s28) == mi("x^2, x*y^2, x*y*z, y^6, y^5*z"));
    QuadricCandidateSpec s0{3, 3, 0, {}, {0, 0, 0}};
    CHECK(candidate_ideal(s0) == quadric_acm_ideal(3, 3));
    QuadricCandidateSpec bad{2, 2, 2, {1, 5}, {}};
    CHECK_THROWS(candidate_ideal(bad));
}

TEST_CASE("strict specs give strongly stable ideals, loose ones need not") {
    QuadricCandidateSpec strict{2, 2, 2, {5, 1}, {}, true};
    CHECK(strict.valid());
    CHECK(is_borel_fixed(candidate_ideal(strict)));
    QuadricCandidateSpec loose{2, 2, 2, {3, 3}, {}};
    CHECK(loose.valid());
    QuadricCandidateSpec loose_strict = loose;
    loose_strict.strict = true;
    CHECK(!loose_strict.valid());
    CHECK(!is_borel_fixed(candidate_ideal(loose)));
}

TEST_CASE("hp_sum_condition") {
    CHECK(hp_sum_condition({2, 2, 2, {5, 1}, {}}));
    CHECK(hp_sum_condition({3, 3, 3, {7, 5, 3}, {}}));
    CHECK(hp_sum_condition({2, 2, 0, {}, {0, 0}}));
    CHECK(!hp_sum_condition({2, 2, 2, {5, 2}, {}}));
}

TEST_CASE("necessary_condition_c1 checks the ladder corner monomials") {
    CHECK(!necessary_condition_c1(mi("x, y^3*z, y^4"), AcmBorelSpec{2, {1, 2}}));
    AcmBorelSpec q13{2, {1, 4}};
    CHECK(necessary_condition_c1(mi("x^2, x*y, x*z^3, y^5"), q13));
    CHECK(!necessary_condition_c1(mi("x^2, x*y, x*z, y^6, y^5*z^2"), q13));
}

TEST_CASE("condition_c2 compares ideal hilbert functions up to the gotzmann bound") {
    MonomialIdeal j5 = mi("x^2, x*y, x*z^3, y^5");
    MonomialIdeal j6 = mi("x^2, x*y^2, x*y*z, x*z^2, y^5");
    MonomialIdeal j7 = mi("x^2, x*y, y^4");
    CHECK(hf_ideal(j6, 2) == 1);
    CHECK(hf_ideal(j7, 2) == 2);
    CHECK(!condition_c2(j6, j7));
    CHECK(condition_c2(j5, j7));
    CHECK(condition_c2(j7, j7));
    CHECK_THROWS(condition_c2(mi("x, y^2"), j7));
}

TEST_CASE("filter_candidates partitions the degree-5 genus-2 catalogue") {
    FilterResult r = filter_candidates(1, 3);
    REQUIRE(r.catalog.entries.size() == 7);
    CHECK(r.failing_c1.size() == 4);
    for (int lbl = 1; lbl <= 4; ++lbl)
        CHECK(in_list(r.failing_c1, r.catalog.entries[lbl - 1]));
    REQUIRE(r.failing_c2.size() == 1);
    CHECK(r.failing_c2[0] == mi("x^2, x*y^2, x*y*z, x*z^2, y^5"));
    REQUIRE(r.passing.size() == 2);
    CHECK(in_list(r.passing, mi("x^2, x*y, x*z^3, y^5")));
    CHECK(in_list(r.passing, mi("x^2, x*y, y^4")));
}

TEST_CASE("filter_candidates for (2,2) leaves the seven published survivors") {
    FilterResult r = filter_candidates(2, 2);
    CHECK(r.catalog.entries.size() == 31);
    std::vector<MonomialIdeal> expect = {
        mi("x^2, x*y, y^6, x*z^6"),
        mi("x^2, x*y^2, x*y*z, y^6, x*z^5"),
        mi("x^2, x*y^2, x*y*z^2, x*z^4, y^6"),
        mi("x^2, x*y, y^6, y^5*z^2"),
        mi("x^2, x*y^2, x*y*z, y^6, y^5*z"),
        mi("x^2, x*y^2, x*y*z^2, y^5"),
        mi("x^2, x*y^2, y^4"),
    };
    REQUIRE(r.passing.size() == expect.size());
    for (auto& J : expect) CHECK(in_list(r.passing, J));
}

TEST_CASE("predicted specs with p = 1") {
    CHECK(candidate_ideal(predicted_p1(2, 2, 1)) == mi("x^2, x*y^2, x*y*z, y^6, y^5*z"));
    CHECK(candidate_ideal(predicted_p1(2, 2, 2)) == mi("x^2, x*y, y^6, y^5*z^2"));
    CHECK(candidate_ideal(predicted_p1(2, 2, 0)) == mi("x^2, x*y^2, x*y*z^2, y^5"));
    CHECK(candidate_ideal(predicted_p1(1, 3, 0)) == mi("x^2, x*y, x*z^3, y^5"));
    CHECK_THROWS(predicted_p1(2, 2, 3));
}

TEST_CASE("predicted specs with p = 2") {
    auto [s1, ok1] = predicted_p2(2, 2, 5, 1, 0);
    CHECK(ok1);
    CHECK(candidate_ideal(s1) == mi("x^2, x*y^2, x*y*z, y^6, x*z^5"));
    auto [s2, ok2] = predicted_p2(2, 2, 4, 2, 0);
    CHECK(ok2);
    CHECK(candidate_ideal(s2) == mi("x^2, x*y^2, x*y*z^2, x*z^4, y^6"));
    auto [s3, ok3] = predicted_p2(2, 2, 3, 2, 1);
    CHECK(!ok3);
    (void)s3;
    CHECK_THROWS(predicted_p2(2, 2, 3, 2, 0));
}

TEST_CASE("predicted specs with p = 3 classify into the three cases") {
    CHECK(predicted_p3(3, 3, 7, 5, 3).second == 2);
    CHECK(predicted_p3(3, 3, 9, 6, 0).second == 3);
    CHECK(predicted_p3(3, 3, 8, 7, 0).second == 0);
    CHECK(predicted_p3(3, 4, 8, 5, 5).second == 1);
    CHECK_THROWS(predicted_p3(3, 3, 9, 5, 0));
    CHECK_THROWS(predicted_p3(2, 3, 8, 5, 2));
}

TEST_CASE("partitions") {
    CHECK(partitions(2, 2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}});
    CHECK(partitions(4, 2, 2) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(partitions(0, 3, 2) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(partitions(7, 2, 2).empty());
}

TEST_CASE("predicted specs with p = l") {
    auto [s0, ok0] = predicted_part(3, 3, {0, 0, 0});
    CHECK(ok0);
    CHECK(s0.a == std::vector<int>{7, 5, 3});
    CHECK(hp_sum_condition(s0));
    auto [s1, ok1] = predicted_part(2, 5, {0, 1});
    CHECK(ok1);
    CHECK(s1.a == std::vector<int>{8, 4});
    for (int l = 1; l <= 3; ++l) {
        auto [s, ok] = predicted_part(l, 2, std::vector<int>(l, 0));
        CHECK(ok);
        for (int i = 0; i < l; ++i) CHECK(s.a[i] == 2 + 2 * (l - 1 - i));
        CHECK(hp_sum_condition(s));
    }
    CHECK_THROWS(predicted_part(2, 2, {3, 0}));
    CHECK_THROWS(predicted_part(3, 2, {0, 1}));
}

TEST_CASE("sum condition forces the hilbert polynomial of the ladder curve") {
    for (int l = 1; l <= 3; ++l) {
        for (int m = 1; m <= 3; ++m) {
            HilbertPolynomial ref = hilbert_polynomial_quotient(quadric_acm_ideal(l, m));
            for (int p = 0; p <= l; ++p) {
                int total = p * m + p * (p - 1);
                for (int sa = 0; sa <= total; ++sa) {
                    for (auto& a : partitions(sa, p, total)) {
                        for (auto& b : partitions(total - sa, l - p, total)) {
                            QuadricCandidateSpec spec{l, m, p, a, b};
                            REQUIRE(hp_sum_condition(spec));
                            CHECK(hilbert_polynomial_quotient(candidate_ideal(spec)) == ref);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("survivor lists contain the base ideal and the fitting predictions") {
    for (int l = 1; l <= 2; ++l) {
        for (int m = 2; m <= 3; ++m) {
            FilterResult r = filter_candidates(l, m);
            CHECK(in_list(r.passing, quadric_acm_ideal(l, m)));
            if (l >= 1)
                for (int i = (l == 1 ? 0 : 0); i <= (l == 1 ? 0 : m); ++i)
                    CHECK(in_list(r.passing, candidate_ideal(predicted_p1(l, m, i))));
            if (l == 2) {
                for (int a0 = m + 1; a0 <= 2 * m + 2; ++a0) {
                    int a1 = 2 * m + 2 - a0;
                    if (a1 > a0 || a1 < 0) continue;
                    auto [s, ok] = predicted_p2(l, m, a0, a1, 0);
                    if (ok && is_borel_fixed(candidate_ideal(s)))
                        CHECK(in_list(r.passing, candidate_ideal(s)));
                }
            }
        }
    }
}

TEST_CASE("the quadric corner test is equivalent to the three-monomial check") {
    for (auto [l, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}}) {
        BorelCatalog cat =
            enumerate_saturated_borel(hilbert_polynomial_quotient(quadric_acm_ideal(l, m)), 4);
        AcmBorelSpec spec{2, {l, l + m}};
        Ring r = Ring::rationals(4);
        for (auto& J : cat.entries) {
            bool direct = J.contains(parse_monomial(r, "x^2")) &&
                          J.contains(parse_monomial(r, std::string("x*y^") + std::to_string(l))) &&
                          J.contains(parse_monomial(r, std::string("y^") + std::to_string(2 * l + m)));
            CHECK(necessary_condition_c1(J, spec) == direct);
        }
    }
}
