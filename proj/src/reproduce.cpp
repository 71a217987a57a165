#include "boreldegen/reproduce.hpp"
#include "boreldegen/acm.hpp"
#include "boreldegen/degeneration.hpp"
#include "boreldegen/parse.hpp"
#include "boreldegen/segment.hpp"
#include "boreldegen/witness.hpp"
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace boreldegen {

int worker_count() {
    if (const char* env = std::getenv("BOREL_DEGEN_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

const Ring& r4() {
    static Ring r = Ring::rationals(4);
    return r;
}
MonomialIdeal mi(const std::string& s) { return parse_monomial_ideal(r4(), s); }
Polynomial pp(const std::string& s) { return parse_polynomial(r4(), s); }

CheckItem check(std::string id, bool pass, std::string detail = "") {
    return CheckItem{std::move(id), pass, false, std::move(detail)};
}

} // namespace

SuiteReport reproduce_counts() {
    SuiteReport rep;
    const std::pair<const char*, int> expected[] = {
        {"5t-2", 7}, {"6t-3", 31}, {"7t-5", 112}, {"9t-12", 989}};
    std::vector<CheckItem> items(4);
    parallel_for(4, [&](int i) {
        auto [hp, want] = expected[i];
        int got = (int)enumerate_saturated_borel(parse_hilbert_polynomial(hp), 4).entries.size();
        items[i] = check(std::string("count ") + hp,
                         got == want, "expected " + std::to_string(want) + ", got " + std::to_string(got));
    });
    rep.items = items;
    return rep;
}

SuiteReport reproduce_filter_13() {
    SuiteReport rep;
    auto fr = filter_candidates(1, 3);
    auto has = [](const std::vector<MonomialIdeal>& v, const MonomialIdeal& J) {
        return std::find(v.begin(), v.end(), J) != v.end();
    };
    std::vector<MonomialIdeal> want_c1 = {mi("x, y^6, y^5*z^3"), mi("x, y^7, y^6*z, y^5*z^2"),
                                          mi("x^2, x*y, x*z, y^6, y^5*z^2"),
                                          mi("x^2, x*y, x*z^2, y^6, y^5*z")};
    bool c1 = fr.failing_c1.size() == 4;
    for (auto& J : want_c1) c1 = c1 && has(fr.failing_c1, J);
    rep.items.push_back(check("filter(1,3) failing-C1 set", c1,
                              "got " + std::to_string(fr.failing_c1.size()) + " ideals"));
    MonomialIdeal j6 = mi("x^2, x*y^2, x*y*z, x*z^2, y^5");
    bool c2 = fr.failing_c2.size() == 1 && fr.failing_c2[0] == j6;
    rep.items.push_back(check("filter(1,3) failing-C2 = one ideal", c2));
    long h6 = hf_ideal(j6, 2), h7 = hf_ideal(mi("x^2, x*y, y^4"), 2);
    rep.items.push_back(check("filter(1,3) degree-2 gap 1 < 2", h6 == 1 && h7 == 2,
                              std::to_string(h6) + " vs " + std::to_string(h7)));
    bool pass = fr.passing.size() == 2 && has(fr.passing, mi("x^2, x*y, x*z^3, y^5")) &&
                has(fr.passing, mi("x^2, x*y, y^4"));
    rep.items.push_back(check("filter(1,3) passing pair", pass));
    return rep;
}

SuiteReport reproduce_degenerations_22(uint64_t seed) {
    struct Item {
        std::vector<long long> v;
        const char* sat;
        bool exact;
    };
    const std::vector<Item> table = {
        {{43, 9, 2, 1}, "x^2, x*y, y^6, x*z^6", false},
        {{17, 4, 1, 0}, "x^2, x*y^2, x*y*z, y^6, x*z^5", false},
        {{16, 4, 2, 0}, "x^2, x*y^2, x*y*z^2, x*z^4, y^6", true},
        {{51, 13, 2, 1}, "x^2, x*y, y^6, y^5*z^2", false},
        {{45, 12, 2, 1}, "x^2, x*y^2, x*y*z, y^6, y^5*z", false},
        {{38, 11, 2, 1}, "x^2, x*y^2, x*y*z^2, y^5", true},
    };
    // seeded generic cubic on the generic support (degree 3, no x, y-deg < 2)
    std::mt19937_64 rng(seed ? seed : 1);
    std::uniform_int_distribution<int> coef(1, 97);
    Polynomial F(r4());
    for (auto& mon : generic_f_support(2, 2)) F.add_term(mon, FieldElem(coef(rng)));
    auto I = minor_ideal(2, 2, F);
    SuiteReport rep;
    std::vector<CheckItem> items(table.size());
    parallel_for((int)table.size(), [&](int i) {
        auto& it = table[i];
        auto in = initial_ideal(I, TermOrder::bracket(it.v));
        auto target = mi(it.sat);
        bool ok = saturation(in) == target && (!it.exact || in == target);
        std::ostringstream id;
        id << "(2,2) order [" << it.v[0] << "," << it.v[1] << "," << it.v[2] << "," << it.v[3]
           << "]" << (it.exact ? " (exact)" : "");
        items[i] = check(id.str(), ok, ok ? "" : "got " + saturation(in).to_string(r4()));
    });
    rep.items = items;
    return rep;
}

SuiteReport reproduce_witnesses_31() {
    struct Item {
        const char* name;
        const char* F;
        TermOrder order;
        const char* target;
    };
    const std::vector<Item> table = {
        {"(3,1) ladder-6 lex", "y^2*z + w*z*y + 2*y*z^2 - w^2*z + 4*z^3", TermOrder::lex(4),
         "x^2, x*y^3, x*y^2*z, x*y*z^2, x*z^6, y^7"},
        {"(3,1) short-ladder lex", "y^2*z + w*z*y - 2*w^2*y + y*z^2 - 9*w^2*z + 3*z^3 + 6*w^3",
         TermOrder::lex(4), "x^2, x*y^2, x*y*z^4, x*z^5, y^7"},
        {"(3,1) order [10,3,2,1]", "y^2*z + y*z^2 + z*w^2", TermOrder::bracket({10, 3, 2, 1}),
         "x^2, x*y^3, x*y^2*z, x*y*z^2, y^6*z, y^7"},
    };
    SuiteReport rep;
    std::vector<CheckItem> items(table.size());
    parallel_for((int)table.size(), [&](int i) {
        auto& it = table[i];
        auto r = verify_witness(3, 1, pp(it.F), it.order, mi(it.target));
        items[i] = check(it.name, r.verified,
                         r.verified ? "" : "saturation " + r.saturated.to_string(r4()));
    });
    rep.items = items;
    return rep;
}

SuiteReport reproduce_suite_33() {
    SuiteReport rep;
    // full ladder test: x^2, x y^3, y^9 all in J (the published (3,3)
    // count uses this, not the corner-only variant of the small cases)
    auto cat = enumerate_saturated_borel(parse_hilbert_polynomial("9t-12"), 4);
    auto acm = quadric_acm_ideal(3, 3);
    std::vector<MonomialIdeal> c1pass;
    for (auto& J : cat.entries)
        if (!(J == acm) && necessary_condition_c1(J, AcmBorelSpec{2, {3, 6}}))
            c1pass.push_back(J);
    CheckItem count;
    count.id = "(3,3) ladder-condition passers: computed " + std::to_string(c1pass.size()) +
               "; published count is 45";
    count.pass = c1pass.size() == 45;
    count.warn_only = true;
    count.detail = "WARNING: (x^2, x*y^3, x*y^2*z^2, x*y*z^3, y^8*z^3, y^9) passes both "
                   "necessary conditions but is absent from the published lists";
    rep.items.push_back(count);
    std::vector<MonomialIdeal> c2fail;
    for (auto& J : c1pass)
        if (!condition_c2(J, acm)) c2fail.push_back(J);
    bool c2 = c2fail.size() == 1 &&
              c2fail[0] == mi("x^2, x*y^3, x*y^2*z^4, x*y*z^5, x*z^6, y^9");
    rep.items.push_back(check("(3,3) Hilbert-function condition removes exactly one ideal", c2,
                              std::to_string(c2fail.size()) + " removed"));

    struct Item {
        const char* target;
        const char* F;
        std::vector<long long> m; // empty: lex
        bool sqrt7 = false;
    };
    const std::vector<Item> table = {
        {"x^2, x*y^3, x*y^2*z, x*y*z^2, y^9, x*z^12",
         "y^2*z^3 - w^3*z^2 + z^5 + 2*w*z^3*y + w^2*z*y^2", {}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^3, y^9, x*z^11",
         "y^2*z^3 + z^3*w^2 + 5*z^4*y + 25*z^5 + 2*z^3*w*y - 6*w^2*z*y^2", {}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^4, y^9, x*z^10",
         "y^2*z^3 - w*z^4 - z^5 - y*z^4 - w^2*z*y^2", {}},
        {"x^2, x*y^3, x*y^2*z^2, x*y*z^3, y^9, x*z^10",
         "y^2*z^3 + 4*y*z^4 + 11*w*z^4 - 1127/64*w^3*z^2 + 3*z^5 + 7*w*z^3*y", {}},
        {"x^2, x*y^2, x*y*z^6, y^9, x*z^9",
         "y^2*z^3 - 2*w*z^3*y + 5*w^2*z^2*y + z^5 - 85/9*w^2*z*y^2 + 25/3*w^3*y^2 + 3*w*z^4",
         {}},
        {"x^2, x*y^3, x*y^2*z^2, x*y*z^4, y^9, x*z^9",
         "y^2*z^3 + 2*w*z^3*y - z^5 + 2*w*z^2*y^2 - 2*y*z^4", {}},
        {"x^2, x*y^2, y^9, x*y*z^7, x*z^8",
         "9*y^2*z^3 - 18*w*z^3*y + 45*w^2*z^2*y + 9*z^5 - 85*w^2*z*y^2 + 75*w^3*y^2 - 11*y*z^4 "
         "+ 27*w*z^4",
         {}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^6, y^9, x*z^8",
         "y^2*z^3 - w*z^2*y^2 + 2*w*z^3*y*sqrt(7) + 4*w^2*z*y^2 + 7*z^5", {}, true},
        {"x^2, x*y^3, x*y^2*z^3, x*y*z^4, y^9, x*z^8",
         "y^2*z^3 + 8*z^5 - 3*w*z^3*y + 2*w*z^4 - 12*y*z^4", {}},
        {"x^2, x*y^3, x*y^2*z^2, x*y*z^6, x*z^7, y^9",
         "y^2*z^3 + 6*z^5 + 6*w*z^2*y^2 + 6*w*z^3*y + 6*w*z^4 + 6*y*z^4", {}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^2, y^9, y^8*z^5",
         "y^2*z^3 + w*z^4 - 2*z^5 + w^2*z*y^2 + w^3*z^2 + w^2*z^2*y",
         {14, 2, 0, 0, 0, 0, 2, 1}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^3, y^9, y^8*z^4",
         "y^2*z^3 - 2*z^5 + w^2*z*y^2 + w^2*z^2*y + w*z^4", {14, 2, 0, 0, 0, 0, 2, 1}},
        {"x^2, x*y^3, x*y^2*z, x*y*z^4, y^9, y^8*z^3",
         "y^2*z^3 - 2*z^5 + w^2*z*y^2 - y*z^4 + w*z^4", {14, 2, 0, 0, 0, 0, 2, 1}},
        {"x^2, x*y^3, x*y^2*z^2, x*y*z^4, y^9, y^8*z^2",
         "y^2*z^3 - 2*z^5 + w*z^4 - w^2*z^2*y", {14, 2, 0, 0, 0, 0, 1, -1}},
        {"x^2, x*y^3, x*y^2*z^3, x*y*z^4, y^9, y^8*z",
         "y^2*z^3 + y*z^4 - 2*z^5 + w*z^4", {14, 2, 0, 0, 0, 0, 7, 1}},
        {"x^2, x*y^2, y^9, y^8*z, y^7*z^2",
         "y^2*z^3 + w^2*z^2*y - w^3*z*y + w*z^2*y^2 + w^4*z - 3*w^5",
         {12, 2, 0, 0, 0, 0, 7, 1}},
    };
    std::vector<CheckItem> items(table.size());
    parallel_for((int)table.size(), [&](int i) {
        auto& it = table[i];
        Ring ring = it.sqrt7 ? Ring::quadratic(4, 7) : r4();
        TermOrder o = it.m.empty() ? TermOrder::lex(4) : TermOrder::m_order(it.m);
        auto r = verify_witness(3, 3, parse_polynomial(ring, it.F), o,
                                parse_monomial_ideal(ring, it.target));
        items[i] = check("(3,3) curve " + std::to_string(i + 1) + " -> (" + it.target + ")",
                         r.verified, r.verified ? "" : "saturation " + r.saturated.to_string(r4()));
    });
    for (auto& it : items) rep.items.push_back(it);
    return rep;
}

SuiteReport reproduce_predictions(bool smoke, uint64_t seed) {
    struct Job {
        std::string id;
        int l, m, i, j;
        std::vector<int> p_vec;
    };
    std::vector<Job> jobs;
    int mmax = smoke ? 3 : 4;
    auto add = [&](const std::string& id, int l, int m, int i, int j,
                   const std::vector<int>& pv = {}) {
        if (smoke && !((l == 2 && m == 2) || (l == 3 && m == 3))) return;
        jobs.push_back({id, l, m, i, j, pv});
    };
    for (int m = 1; m <= mmax; ++m) {
        for (int i = 0; i <= m; ++i) {
            add("EqProq2.1", 2, m, i, 0);
            add("EqProq2.2", 2, m, i, 0);
        }
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m + 1; ++j)
                for (auto id : {"CorBLL.a", "CorBLL.b", "PDpos.a", "PDpos.b", "PDpos.c",
                                "PDneg.a", "PDneg.b", "PDneg.c", "ileqj.a", "ileqj.a2",
                                "ileqj.b", "Aen.a", "Aen.b", "Aen.c", "P2A", "P2B", "P1"})
                    add(id, 3, m, i, j);
        for (int l = 1; l <= mmax; ++l) add("Part", l, m, 0, 0, std::vector<int>(l, 0));
    }
    struct Slot {
        bool used = false;
        CheckItem item;
    };
    std::vector<Slot> slots(jobs.size());
    parallel_for((int)jobs.size(), [&](int k) {
        auto& jb = jobs[k];
        PredictionCase c;
        try {
            c = prediction_catalogue(jb.id, jb.l, jb.m, jb.i, jb.j, jb.p_vec);
        } catch (const std::invalid_argument&) {
            return; // hypotheses not met: not an admissible instance
        }
        std::ostringstream id;
        id << jb.id << " l=" << jb.l << " m=" << jb.m << " i=" << jb.i << " j=" << jb.j;
        try {
            auto r = verify_prediction(c, seed ? seed : 1);
            slots[k] = {true, check(id.str(), r.confirmed, r.details)};
        } catch (const std::runtime_error& e) {
            std::string msg = e.what();
            if (msg.find("inconsistent") != std::string::npos) return; // cone is empty
            slots[k] = {true, check(id.str(), false, msg)};
        }
    });
    SuiteReport rep;
    int nconfirmed = 0;
    for (auto& s : slots)
        if (s.used) {
            rep.items.push_back(s.item);
            if (s.item.pass) ++nconfirmed;
        }
    rep.items.push_back(check("prediction sweep nonempty", nconfirmed >= (smoke ? 10 : 40),
                              std::to_string(nconfirmed) + " confirmed"));
    return rep;
}

SuiteReport reproduce_properties(uint64_t seed) {
    SuiteReport rep;
    std::mt19937_64 rng(seed ? seed : 1);

    { // Groebner: every S-polynomial of the reduced basis reduces to zero
        bool ok = true;
        std::uniform_int_distribution<int> nc(1, 3), ex(0, 2), cf(-5, 5);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < 3; ++g) {
                Polynomial p(r4());
                for (int t = 0, k = nc(rng); t <= k; ++t) {
                    int c = cf(rng);
                    if (c) p.add_term(Monomial({ex(rng), ex(rng), ex(rng), ex(rng)}), FieldElem(c));
                }
                if (!p.is_zero()) gens.push_back(p);
            }
            if (gens.empty()) continue;
            auto o = TermOrder::degrevlex(4);
            auto G = buchberger(PolynomialIdeal{r4(), gens}, o);
            for (size_t a = 0; a < G.size() && ok; ++a)
                for (size_t b = a + 1; b < G.size() && ok; ++b)
                    ok = normal_form(s_polynomial(G[a], G[b], o), G, o).is_zero();
        }
        rep.items.push_back(check("random Groebner bases close under S-polynomials", ok));
    }
    { // initial ideal preserves the Hilbert function (exact rank oracle)
        bool ok = true;
        auto I = minor_ideal(2, 2, pp("y*z^2 + 2*z^3 - w^3 + 3*z*w^2"));
        for (auto& o : {TermOrder::lex(4), TermOrder::degrevlex(4)}) {
            auto in = initial_ideal(I, o);
            for (int d = 0; d <= 12 && ok; ++d) {
                // dim I_d by Gaussian elimination on all generator multiples
                auto cols = monomials_of_degree(4, d);
                std::vector<std::vector<FieldElem>> rows;
                for (auto& g : I.gens) {
                    if (g.degree() > d) continue;
                    for (auto& u : monomials_of_degree(4, d - g.degree())) {
                        std::vector<FieldElem> row(cols.size());
                        for (auto& [mon, c] : g.terms())
                            row[std::find(cols.begin(), cols.end(), mon * u) - cols.begin()] = c;
                        rows.push_back(std::move(row));
                    }
                }
                long rank = 0;
                for (size_t col = 0; col < cols.size() && rank < (long)rows.size(); ++col) {
                    size_t piv = rank;
                    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
                    if (piv == rows.size()) continue;
                    std::swap(rows[rank], rows[piv]);
                    for (size_t rr = rank + 1; rr < rows.size(); ++rr) {
                        if (rows[rr][col].is_zero()) continue;
                        FieldElem f = fdiv(rows[rr][col], rows[rank][col], r4().field);
                        for (size_t cc = col; cc < cols.size(); ++cc)
                            rows[rr][cc] = fsub(rows[rr][cc], fmul(f, rows[rank][cc], r4().field));
                    }
                    ++rank;
                }
                ok = rank == hf_ideal(in, d);
            }
        }
        rep.items.push_back(check("initial ideals preserve the Hilbert function", ok));
    }
    { // saturation idempotence + brute-force colon oracle
        bool ok = true;
        std::uniform_int_distribution<int> ex(0, 3), ng(2, 5);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::vector<Monomial> gens;
            for (int g = 0, k = ng(rng); g < k; ++g)
                gens.push_back(Monomial({ex(rng), ex(rng), ex(rng), ex(rng)}));
            auto I = MonomialIdeal::make(4, gens);
            if (I.gens.empty()) continue;
            auto S = saturation(I);
            ok = saturation(S) == S && S.contains_ideal(I);
            // oracle: m in sat(I) iff m * x_i^K in I for every i, K large
            for (int d = 0; d <= 6 && ok; ++d)
                for (auto& mon : monomials_of_degree(4, d)) {
                    bool brute = true;
                    for (int v = 0; v < 4 && brute; ++v)
                        brute = I.contains(mon * Monomial::var(4, v, 24));
                    if (brute != S.contains(mon)) ok = false;
                }
        }
        rep.items.push_back(check("saturation idempotent and colon-consistent", ok));
    }
    { // Gotzmann number = regularity of the lex-segment ideal
        bool ok = true;
        for (int d = 3; d <= 9 && ok; ++d)
            for (int c = -12; c <= 2 && ok; ++c) {
                HilbertPolynomial p = HilbertPolynomial::linear(d, c);
                long g;
                try {
                    g = gotzmann_number(p);
                } catch (const std::exception&) {
                    continue; // not a subscheme Hilbert polynomial
                }
                ok = g == regularity_borel(lex_segment_ideal(p, 4));
            }
        rep.items.push_back(check("Gotzmann number matches lex-segment regularity", ok));
    }
    { // z-transform preserves the Hilbert function
        bool ok = true;
        for (auto& J : {mi("x^2, x*y, y^4"), mi("x^2, x*y^2, x*y*z, y^6, x*z^5"),
                        mi("x^2, x*y^2, x*y*w, y^5")}) {
            auto Z = z_transform(J, seed ? seed : 1);
            for (int d = 0; d <= 10 && ok; ++d) ok = hf_ideal(Z, d) == hf_ideal(J, d);
        }
        rep.items.push_back(check("z-transform preserves the Hilbert function", ok));
    }
    { // segment weights re-verified; segment and obstruction never coexist
        bool ok = true, excl = true;
        auto cat = enumerate_saturated_borel(parse_hilbert_polynomial("7t-5"), 4);
        std::vector<char> okv(cat.entries.size(), 1), exv(cat.entries.size(), 1);
        parallel_for((int)cat.entries.size(), [&](int idx) {
            auto& J = cat.entries[idx];
            int t = (int)regularity_borel(J);
            auto seg = is_segment(J, t);
            if (seg) {
                // every J_t monomial outranks every outside monomial
                long worst_in = 0, best_out = 0;
                bool fin = true, fout = true;
                for (auto& mon : monomials_of_degree(4, t)) {
                    long v = 0;
                    for (int k = 0; k < 4; ++k) v += seg->weights[k] * mon.e[k];
                    if (J.contains(mon)) {
                        if (fin || v < worst_in) worst_in = v;
                        fin = false;
                    } else {
                        if (fout || v > best_out) best_out = v;
                        fout = false;
                    }
                }
                if (!fin && !fout && worst_in <= best_out) okv[idx] = 0;
                if (non_segment_certificate(J, t)) exv[idx] = 0;
            }
        });
        for (size_t i = 0; i < okv.size(); ++i) {
            ok = ok && okv[i];
            excl = excl && exv[i];
        }
        rep.items.push_back(check("segment weights separate exactly", ok));
        rep.items.push_back(check("segment and product obstruction are exclusive", excl));
    }
    return rep;
}

SuiteReport reproduce_discrepancy() {
    SuiteReport rep;
    auto fr = filter_candidates(3, 1);
    size_t got = fr.passing.size();
    CheckItem item;
    item.id = "(3,1) survivor count: computed " + std::to_string(got) +
              "; source lists 17 ideals but its prose says 18";
    item.pass = got == 17;
    item.warn_only = true;
    item.detail = "WARNING: known off-by-one in the source text; our count is " +
                  std::to_string(got);
    rep.items.push_back(item);
    return rep;
}

SuiteReport reproduce_all(uint64_t seed) {
    SuiteReport rep;
    rep.add(reproduce_counts());
    rep.add(reproduce_filter_13());
    rep.add(reproduce_degenerations_22(seed));
    rep.add(reproduce_witnesses_31());
    rep.add(reproduce_suite_33());
    rep.add(reproduce_predictions(true, seed));
    rep.add(reproduce_properties(seed));
    rep.add(reproduce_discrepancy());
    return rep;
}

} // namespace boreldegen
