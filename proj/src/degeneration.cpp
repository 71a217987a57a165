#include "boreldegen/degeneration.hpp"
#include "boreldegen/lp.hpp"
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boreldegen {

namespace {

constexpr int kGeom = 4; // x, y, z, w

Ring family_ring(int q) {
    std::vector<std::string> names = {"x", "y", "z", "w", "s"};
    for (int k = 0; k < q; ++k) names.push_back("t" + std::to_string(k));
    return Ring::rationals(kGeom + 1 + q, names);
}

} // namespace

std::vector<Polynomial> family_generators(const FamilySpec& spec, Ring* out_ring) {
    int l = spec.l, m = spec.m, q = spec.q;
    if (q < 1 || l < q || m < 0 || (int)spec.p_exps.size() != q)
        throw std::invalid_argument("family_generators: bad spec");
    Ring r = family_ring(q);
    int n = r.nvars;
    auto mono = [&](int ex, int ey, int ez, int ew, int es, int tk, int et) {
        std::vector<int> e(n, 0);
        e[0] = ex; e[1] = ey; e[2] = ez; e[3] = ew; e[4] = es;
        if (tk >= 0) e[5 + tk] = et;
        return Monomial(e);
    };
    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::monomial(r, mono(2, 0, 0, 0, 0, -1, 0)));
    gens.push_back(Polynomial::monomial(r, mono(1, l, 0, 0, 0, -1, 0)));
    for (int rr = 0; rr < q; ++rr) {
        Polynomial g(r);
        for (int k = rr; k < q; ++k) {
            int p = spec.p_exps[q - 1 - k];
            int ez = m + k - p;
            if (ez < 0) throw std::invalid_argument("family_generators: negative z exponent");
            g.add_term(mono(1, l - 1 - (k - rr), ez, p, 0, k, 1), FieldElem(1));
        }
        g.add_term(mono(0, m + l + rr, 0, 0, 1, -1, 0), FieldElem(1));
        gens.push_back(g);
    }
    if (out_ring) *out_ring = r;
    return gens;
}

namespace {

long param_value(const ParamMonomial& pm, const WeightAssignment& w) {
    long v = (long)pm[0] * w.w_s;
    for (size_t k = 1; k < pm.size(); ++k) v += (long)pm[k] * w.w_t[k - 1];
    return v;
}

bool check_inequalities(const std::vector<std::pair<ParamMonomial, ParamMonomial>>& ineqs,
                        const WeightAssignment& w) {
    for (auto& [g, s] : ineqs)
        if (param_value(g, w) <= param_value(s, w)) return false;
    return true;
}

} // namespace

WeightAssignment solve_weights(const std::vector<std::pair<ParamMonomial, ParamMonomial>>& ineqs,
                               bool s_minimal, long N, int nt) {
    int n = 1 + nt; // (w_s, w_t0, ..)
    SeparationProblem prob;
    for (auto& [g, s] : ineqs) {
        if ((int)g.size() != n || (int)s.size() != n)
            throw std::invalid_argument("solve_weights: inequality size mismatch");
        std::vector<long> row(n, 0);
        for (int i = 0; i < n; ++i) row[i] = (long)g[i] - (long)s[i];
        prob.rows.push_back(std::move(row));
    }
    auto sol = strict_feasible(prob);
    if (!sol) throw std::runtime_error("solve_weights: inconsistent inequalities");
    // Shrink the feasible point toward the origin: weight magnitudes become
    // u-exponents after specialization, and the limit computation degrades
    // sharply as those grow.
    auto feasible = [&](const std::vector<long>& v) {
        for (auto& row : prob.rows) {
            long acc = 0;
            for (int i = 0; i < n; ++i) acc += row[i] * v[i];
            if (acc <= 0) return false;
        }
        return true;
    };
    std::vector<long> cur = *sol;
    for (;;) {
        std::vector<long> half(n);
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            long a = cur[i] >= 0 ? (cur[i] + 1) / 2 : -((-cur[i] + 1) / 2);
            half[i] = a;
            changed = changed || a != cur[i];
        }
        if (!changed || !feasible(half)) break;
        cur = std::move(half);
    }
    for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i < n; ++i) {
            if (cur[i] == 0) continue;
            std::vector<long> step = cur;
            step[i] += cur[i] > 0 ? -1 : 1;
            if (feasible(step)) {
                cur = std::move(step);
                improved = true;
            }
        }
    }
    WeightAssignment w;
    w.w_s = cur[0];
    w.w_t.assign(cur.begin() + 1, cur.end());
    w.bayer_bound = N;
    if (s_minimal) {
        long lo = 0, hi = 0;
        for (long v : w.w_t) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        // every degree-<=N monomial containing s must evaluate below every
        // s-free one: w_s + (N-1)*hi < N*lo
        w.w_s = N * lo - (N - 1) * hi - 1;
        if (!check_inequalities(ineqs, w))
            throw std::runtime_error("solve_weights: inequalities conflict with s-minimality");
    }
    if (!check_inequalities(ineqs, w))
        throw std::logic_error("solve_weights: verification failed");
    return w;
}

MonomialIdeal specialize_and_limit(const FamilySpec& spec, const WeightAssignment& w) {
    if ((int)w.w_t.size() != spec.q)
        throw std::invalid_argument("specialize_and_limit: weight count mismatch");
    Ring pr;
    auto fam = family_generators(spec, &pr);
    Ring ru = Ring::rationals(kGeom + 1, {"u", "x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (const auto& g : fam) {
        // value of the parameter part of each term; t -> infinity is
        // u -> 0 with s = u^(-w_s), t_k = u^(-w_k)
        long maxval = 0;
        bool first = true;
        std::vector<std::pair<Monomial, long>> terms;
        for (auto& [mon, c] : g.terms()) {
            long v = (long)mon.e[4] * w.w_s;
            for (int k = 0; k < spec.q; ++k) v += (long)mon.e[5 + k] * w.w_t[k];
            terms.push_back({mon, v});
            if (first || v > maxval) maxval = v;
            first = false;
        }
        Polynomial out(ru);
        for (auto& [mon, v] : terms) {
            std::vector<int> e(kGeom + 1, 0);
            long ue = maxval - v;
            if (ue > 1000000) throw std::runtime_error("specialize_and_limit: weight overflow");
            e[0] = (int)ue;
            for (int i = 0; i < kGeom; ++i) e[1 + i] = mon.e[i];
            out.add_term(Monomial(e), g.coeff(mon));
        }
        gens.push_back(out);
    }
    FlatLimit lim = flat_limit(PolynomialIdeal{ru, gens});
    if (!lim.monomial) throw std::runtime_error("weights not generic; refine order");
    return lim.ideal;
}

namespace {

// parameter monomial builders over (s, t_0..t_{q-1})
ParamMonomial pm_zero(int q) { return ParamMonomial(1 + q, 0); }
ParamMonomial pm_s(int q) {
    auto p = pm_zero(q);
    p[0] = 1;
    return p;
}
ParamMonomial pm_t(int q, int k, int e = 1) {
    auto p = pm_zero(q);
    p[1 + k] = e;
    return p;
}
ParamMonomial pm_mul(ParamMonomial a, const ParamMonomial& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

using IneqList = std::vector<std::pair<ParamMonomial, ParamMonomial>>;

void t_chain(IneqList& out, int q) {
    for (int k = 0; k + 1 < q; ++k) out.push_back({pm_t(q, k), pm_t(q, k + 1)});
}

QuadricCandidateSpec shape_p3(int l, int m, int a0, int a1, int a2) {
    QuadricCandidateSpec s;
    s.l = l;
    s.m = m;
    s.p = 3;
    s.a = {a0, a1, a2};
    s.b.assign(l - 3, 0);
    return s;
}

} // namespace

std::vector<std::string> prediction_case_ids() {
    return {"EqProq2.1", "EqProq2.2", "CorBLL.a", "CorBLL.b", "PDpos.a", "PDpos.b",
            "PDpos.c",   "PDneg.a",   "PDneg.b",  "PDneg.c",  "ileqj.a", "ileqj.a2",
            "ileqj.b",   "Aen.a",     "Aen.b",    "Aen.c",    "P2A",     "P2B",
            "P1",        "Part"};
}

PredictionCase prediction_catalogue(const std::string& case_id, int l, int m, int i, int j,
                                    const std::vector<int>& p_vec) {
    PredictionCase c;
    c.id = case_id;
    auto req = [&](bool cond, const char* what) {
        if (!cond) throw std::invalid_argument("prediction_catalogue " + case_id + ": " + what);
    };
    if (case_id == "EqProq2.1" || case_id == "EqProq2.2") {
        int q = 2;
        req(l >= q && 0 <= i && i <= m, "need l >= 2, 0 <= i <= m");
        c.family = {l, m, q, {0, i}};
        c.inequalities = {{pm_t(q, 0), pm_t(q, 1)}, {pm_t(q, 1), pm_s(q)}};
        if (case_id == "EqProq2.1") {
            // t1^2 > s t0: saturated limit has p = 2
            c.inequalities.push_back({pm_t(q, 1, 2), pm_mul(pm_s(q), pm_t(q, 0))});
            c.postprocess = PostProcess::saturate;
            c.predicted = {l, m, 2, {m + 2 + i, m - i}, std::vector<int>(l - 2, 0), false};
        } else {
            // s t0 > t1^2: limit needs the z-transform, p = 1
            c.inequalities.push_back({pm_mul(pm_s(q), pm_t(q, 0)), pm_t(q, 1, 2)});
            c.postprocess = PostProcess::z_then_saturate;
            c.predicted = predicted_p1(l, m, i);
        }
        return c;
    }
    if (case_id == "Part") {
        int q = (int)p_vec.size();
        req(q >= 1 && l == q, "Part needs l == #p_vec");
        for (int k = 0; k < q; ++k) {
            req(p_vec[k] >= 0 && p_vec[k] <= m + k, "p out of range");
            if (k + 1 < q) req(p_vec[k] <= p_vec[k + 1] + 1, "p not staircase");
        }
        auto [spec, hyp] = predicted_part(l, m, p_vec);
        req(hyp, "partition hypothesis fails");
        c.family = {l, m, q, p_vec};
        t_chain(c.inequalities, q);
        if (q >= 1) c.inequalities.push_back({pm_t(q, q - 1), pm_s(q)});
        // for each r: t_r^(r+1) beats every other product t_{la_0}..t_{la_r}
        // with la a partition of r(r+1) into r+1 parts <= l-1
        for (int r = 0; r < q; ++r) {
            for (auto& la : partitions(r * (r + 1), r + 1, l - 1)) {
                if (std::all_of(la.begin(), la.end(), [&](int v) { return v == r; })) continue;
                ParamMonomial rhs = pm_zero(q);
                for (int v : la) rhs[1 + v] += 1;
                c.inequalities.push_back({pm_t(q, r, r + 1), rhs});
            }
        }
        c.s_minimal = true;
        c.postprocess = PostProcess::z_then_saturate;
        c.predicted = spec;
        return c;
    }
    // remaining cases: q = 3, exponents (p0, p1, p2) = (0, j, i)
    int q = 3;
    req(l >= q, "need l >= 3");
    req(0 <= i && i <= m && 0 <= j && j <= m + 1, "need 0 <= i <= m, 0 <= j <= m+1");
    c.family = {l, m, q, {0, j, i}};
    int delta = i - 2 * j;
    // CorBLL/PD* hold in the regime i >= j (with the standing chain t0 > t1 > t2)
    bool needs_i_ge_j = case_id.rfind("CorBLL", 0) == 0 || case_id.rfind("PDpos", 0) == 0 ||
                        case_id.rfind("PDneg", 0) == 0;
    if (needs_i_ge_j) req(i >= j, "needs i >= j");
    auto a_high = [&] { return shape_p3(l, m, m + 4 + 2 * j, m + 2 + i - 2 * j, m - i); };
    auto a_low = [&] { return shape_p3(l, m, m + 4 + i, m + 2, m - i); };
    auto t2gt = [&](int k0, int e0, int k1, int e1) { // t_k0^e0 > t_k1^e1 (single factors)
        c.inequalities.push_back({pm_t(q, k0, e0), pm_t(q, k1, e1)});
    };
    auto push = [&](ParamMonomial g, ParamMonomial s) { c.inequalities.push_back({g, s}); };
    if (case_id != "Aen.a" && case_id != "Aen.b" && case_id != "Aen.c") t_chain(c.inequalities, q);
    c.s_minimal = true;

    if (case_id == "CorBLL.a") {
        req(delta <= 0, "needs i <= 2j");
        push(pm_t(q, 1, 2), pm_mul(pm_t(q, 0), pm_t(q, 2)));
        c.predicted = a_high();
    } else if (case_id == "CorBLL.b") {
        req(delta >= 0, "needs i >= 2j");
        push(pm_mul(pm_t(q, 0), pm_t(q, 2)), pm_t(q, 1, 2));
        c.predicted = a_low();
    } else if (case_id.rfind("PDpos", 0) == 0) {
        req(delta > 0, "needs i > 2j");
        int rho = (j + 1) / delta;
        int d2 = j + 1 - rho * delta;
        auto t1pow = [&](int r) { return pm_t(q, 1, 2 * r + 1); };
        auto t0t2 = [&](int e0, int e2) { return pm_mul(pm_t(q, 0, e0), pm_t(q, 2, e2)); };
        if (case_id == "PDpos.a") {
            req(rho >= 1, "needs rho >= 1");
            push(t1pow(rho - 1), t0t2(rho, rho - 1));
            c.predicted = a_high();
        } else if (case_id == "PDpos.b") {
            req(rho >= 1, "needs rho >= 1");
            push(t0t2(rho, rho - 1), t1pow(rho - 1));
            push(t1pow(rho), t0t2(rho + 1, rho));
            c.predicted = shape_p3(l, m, m + 4 + 2 * j + delta - d2, m + 2 + d2, m - i);
        } else if (case_id == "PDpos.c") {
            push(t0t2(rho + 1, rho), t1pow(rho));
            c.predicted = a_low();
        } else {
            req(false, "unknown PDpos case");
        }
    } else if (case_id.rfind("PDneg", 0) == 0) {
        req(delta < 0, "needs i < 2j");
        int dn = -delta;
        int rho = (j + 1) / dn;
        int d2 = j + 1 - rho * dn;
        auto t1pow = [&](int r) { return pm_t(q, 1, 2 * r + 1); };
        auto t0t2 = [&](int e0, int e2) { return pm_mul(pm_t(q, 0, e0), pm_t(q, 2, e2)); };
        if (case_id == "PDneg.a") {
            push(t0t2(rho, rho + 1), t1pow(rho));
            c.predicted = a_low();
        } else if (case_id == "PDneg.b") {
            push(t1pow(rho), t0t2(rho, rho + 1));
            push(t0t2(rho + 1, rho + 2), t1pow(rho + 1));
            c.predicted = shape_p3(l, m, m + 4 + 2 * j - d2, m + 2 - dn + d2, m - i);
        } else if (case_id == "PDneg.c") {
            push(t1pow(rho + 1), t0t2(rho + 1, rho + 2));
            c.predicted = a_high();
        } else {
            req(false, "unknown PDneg case");
        }
    } else if (case_id == "ileqj.a") {
        req(i <= j - 1, "needs i <= j-1");
        push(pm_t(q, 1, 2), pm_mul(pm_t(q, 0), pm_t(q, 2)));
        c.predicted = shape_p3(l, m, m + 4 + 2 * j, m + 1 - j, m + 1 - j);
    } else if (case_id == "ileqj.a2") {
        req(i <= j - 1, "needs i <= j-1");
        push(pm_mul(pm_t(q, 0), pm_t(q, 2)), pm_t(q, 1, 2));
        push(pm_t(q, 1, 3), pm_mul(pm_t(q, 2, 2), pm_t(q, 0)));
        c.predicted = shape_p3(l, m, m + 4 + 2 * j, m + 1 - j, m + 1 - j);
    } else if (case_id == "ileqj.b") {
        req(i <= j - 1, "needs i <= j-1");
        push(pm_mul(pm_t(q, 0), pm_t(q, 2)), pm_t(q, 1, 2));
        push(pm_mul(pm_t(q, 2, 2), pm_t(q, 0)), pm_t(q, 1, 3));
        c.predicted = shape_p3(l, m, m + 2 + 2 * j - i, m + 3 + i - j, m + 1 - j);
    } else if (case_id == "Aen.a" || case_id == "Aen.b" || case_id == "Aen.c") {
        // t1 strictly largest
        t2gt(1, 1, 0, 1);
        t2gt(1, 1, 2, 1);
        if (case_id == "Aen.a") {
            req(i <= 3 * j + 1, "needs i <= 3j+1");
            c.predicted = shape_p3(l, m, m + 4 + 2 * j, m + 1 - j, m + 1 - j);
        } else if (case_id == "Aen.b") {
            req(i >= 3 * j + 2, "needs i >= 3j+2");
            t2gt(0, 1, 2, 1);
            c.predicted = shape_p3(l, m, m + 3 + i - j, m + 1 - j, m + 2 + 2 * j - i);
        } else {
            req(i >= 3 * j + 2, "needs i >= 3j+2");
            t2gt(2, 1, 0, 1);
            c.predicted = shape_p3(l, m, m + 4 + 2 * j, m + 1 - j, m + 1 - j);
        }
    } else if (case_id == "P2A") {
        req(i >= j, "needs i >= j");
        c.s_minimal = false;
        push(pm_t(q, 2), pm_s(q));
        push(pm_mul(pm_s(q), pm_t(q, 1)), pm_t(q, 2, 2));
        c.postprocess = PostProcess::z_then_saturate;
        c.predicted.l = l;
        c.predicted.m = m;
        c.predicted.p = 2;
        c.predicted.a = {m + 2 + i - j, m - i};
        c.predicted.b.assign(l - 2, 0);
        c.predicted.b[0] = j;
    } else if (case_id == "P2B") {
        req(j <= i && i <= 2 * j, "needs j <= i <= 2j");
        c.s_minimal = false;
        push(pm_mul(pm_t(q, 1), pm_t(q, 2, 2)), pm_mul(pm_s(q), pm_t(q, 1, 2)));
        push(pm_mul(pm_s(q), pm_t(q, 1, 2)), pm_t(q, 2, 3));
        push(pm_t(q, 1, 2), pm_mul(pm_t(q, 0), pm_t(q, 2)));
        c.postprocess = PostProcess::z_then_saturate;
        c.predicted.l = l;
        c.predicted.m = m;
        c.predicted.p = 2;
        c.predicted.a = {m + 2 + i - 2 * j, m - i};
        c.predicted.b.assign(l - 2, 0);
        c.predicted.b[0] = 2 * j;
    } else if (case_id == "P1") {
        req(i >= 2 * j, "needs i >= 2j");
        c.s_minimal = false;
        c.inequalities.clear();
        push(pm_t(q, 0), pm_t(q, 1));
        push(pm_t(q, 1), pm_s(q));
        push(pm_s(q), pm_t(q, 2));
        push(pm_mul(pm_s(q), pm_t(q, 0)), pm_t(q, 1, 2));
        c.postprocess = PostProcess::z_then_saturate;
        c.predicted.l = l;
        c.predicted.m = m;
        c.predicted.p = 1;
        c.predicted.a = {m - i + j};
        c.predicted.b.assign(l - 1, 0);
        c.predicted.b[0] = i - j;
    } else {
        req(false, "unknown case id");
    }
    return c;
}

VerifyResult verify_prediction(const PredictionCase& c, uint64_t seed) {
    VerifyResult res;
    res.predicted = candidate_ideal(c.predicted);
    long N = 2 * gotzmann_number(hilbert_polynomial_quotient(quadric_acm_ideal(c.family.l, c.family.m)));
    WeightAssignment w = solve_weights(c.inequalities, c.s_minimal, N, c.family.q);
    MonomialIdeal limit;
    bool got = false;
    std::string lasterr;
    for (int attempt = 0; attempt < 4 && !got; ++attempt) {
        try {
            limit = specialize_and_limit(c.family, w);
            got = true;
        } catch (const std::runtime_error& e) {
            lasterr = e.what();
            // stay inside the open cone: scale, then nudge the largest weight
            WeightAssignment w2 = w;
            w2.w_s *= 2;
            for (auto& v : w2.w_t) v *= 2;
            auto it = std::max_element(w2.w_t.begin(), w2.w_t.end());
            *it += 1;
            if (!check_inequalities(c.inequalities, w2)) *it -= 1;
            w = w2;
        }
    }
    res.weights = w;
    if (!got) {
        res.details = "no monomial limit: " + lasterr;
        return res;
    }
    MonomialIdeal processed =
        c.postprocess == PostProcess::z_then_saturate ? z_transform(limit, seed) : limit;
    res.actual = saturation(processed);
    res.confirmed = res.actual == res.predicted;
    if (!res.confirmed)
        res.details = "limit saturation " + res.actual.to_string() + " != predicted " +
                      res.predicted.to_string();
    return res;
}

} // namespace boreldegen
