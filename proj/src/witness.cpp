#include "boreldegen/witness.hpp"
#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace boreldegen {

PolynomialIdeal minor_ideal(int l, int m, const Polynomial& F) {
    const Ring& r = F.ring();
    if (r.nvars != 4) throw std::invalid_argument("minor_ideal: need 4 variables");
    if (F.is_zero() || !F.is_homogeneous() || F.degree() != l + m - 1)
        throw std::invalid_argument("minor_ideal: F must be homogeneous of degree l+m-1");
    for (auto& [mon, c] : F.terms())
        if (mon.e[0] != 0 || mon.e[1] >= l)
            throw std::invalid_argument("minor_ideal: F must avoid x and have y-exponent < l");
    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::variable(r, 0, 2));
    gens.push_back(Polynomial::monomial(r, Monomial({1, l, 0, 0})));
    Polynomial g = F.times_term(Monomial::var(4, 0), FieldElem(1));
    g.add_term(Monomial::var(4, 1, l + m), FieldElem(1));
    gens.push_back(g);
    return {r, gens};
}

WitnessResult verify_witness(int l, int m, const Polynomial& F, const TermOrder& o,
                             const MonomialIdeal& target) {
    WitnessResult res;
    res.initial = initial_ideal(minor_ideal(l, m, F), o);
    res.saturated = saturation(res.initial);
    res.verified = res.saturated == target;
    return res;
}

std::vector<Monomial> generic_f_support(int l, int m) {
    std::vector<Monomial> out;
    for (int i = 0; i < l; ++i)
        for (int a = m + i; a >= 0; --a)
            out.push_back(Monomial({0, l - 1 - i, a, m + i - a}));
    return out;
}

namespace {

// polynomial in x,y,z,w whose coefficients are polynomials in the
// constraint variables
struct SymPoly {
    std::map<Monomial, Polynomial, CanonicalGreater> terms;

    void add(const Monomial& m, const Polynomial& c) {
        auto [it, fresh] = terms.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool empty() const { return terms.empty(); }
    Monomial lead(const TermOrder& o) const {
        auto best = terms.begin();
        for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
            if (o.greater(it->first, best->first)) best = it;
        return best->first;
    }
};

SymPoly sym_scale_shift(const SymPoly& g, const Monomial& u, const Polynomial& c) {
    SymPoly out;
    for (auto& [m, q] : g.terms) out.add(m * u, q * c);
    return out;
}

SymPoly sym_sub(const SymPoly& a, const SymPoly& b) {
    SymPoly out = a;
    for (auto& [m, q] : b.terms) out.add(m, -q);
    return out;
}

} // namespace

ConstraintSystem generate_constraints(int l, int m, const MonomialIdeal& target,
                                      const TermOrder& o, int budget) {
    auto support = generic_f_support(l, m);
    int nb = (int)support.size();
    int ninv = budget + 8;
    std::vector<std::string> names;
    for (int i = 0; i < nb; ++i) names.push_back("c" + std::to_string(i));
    for (int i = 0; i < ninv; ++i) names.push_back("v" + std::to_string(i));
    ConstraintSystem sys;
    sys.cring = Ring::rationals(nb + ninv, names);
    sys.n_base = nb;
    const Ring& cr = sys.cring;
    int next_inv = nb;

    Polynomial cone = Polynomial::constant(cr, FieldElem(1));
    std::vector<SymPoly> gens(3);
    gens[0].add(Monomial({2, 0, 0, 0}), cone);
    gens[1].add(Monomial({1, l, 0, 0}), cone);
    gens[2].add(Monomial({0, l + m, 0, 0}), cone);
    for (int i = 0; i < nb; ++i) {
        Monomial xm = support[i];
        xm.e[0] += 1;
        gens[2].add(xm, Polynomial::variable(cr, i));
    }

    std::vector<SymPoly> basis;
    auto emit_equality = [&](const Polynomial& q) {
        if (std::find(sys.equalities.begin(), sys.equalities.end(), q) == sys.equalities.end())
            sys.equalities.push_back(q);
    };
    // reduce h, emitting relations; returns a normalized new basis element
    // (lead coefficient 1) or nothing when h collapses
    auto process = [&](SymPoly h) -> std::optional<SymPoly> {
        while (!h.empty()) {
            Monomial lm = h.lead(o);
            bool reduced = false;
            for (auto& g : basis) {
                Monomial glm = g.lead(o);
                if (glm.divides(lm)) {
                    h = sym_sub(h, sym_scale_shift(g, lm.div(glm), h.terms.at(lm)));
                    reduced = true;
                    break;
                }
            }
            if (reduced) continue;
            Polynomial q = h.terms.at(lm);
            bool constant = q.degree() <= 0;
            // a single term in inverse variables only is a unit too
            bool unit = constant && !q.is_zero();
            if (q.is_monomial()) {
                bool invonly = true;
                for (int i = 0; i < nb && invonly; ++i)
                    if (q.terms().begin()->first.e[i] != 0) invonly = false;
                unit = unit || invonly;
            }
            if (target.contains(lm)) {
                if (constant && !q.is_zero()) {
                    FieldElem c = q.coeff(Monomial::one(cr.nvars));
                    for (auto& [mm, qq] : h.terms)
                        qq = qq.scaled(fdiv(FieldElem(1), c, cr.field));
                    return h;
                }
                if (next_inv >= cr.nvars) {
                    sys.budget_exhausted = true;
                    return std::nullopt;
                }
                Polynomial v = Polynomial::variable(cr, next_inv);
                sys.inverses.push_back({next_inv, q});
                ++next_inv;
                for (auto& [mm, qq] : h.terms) qq = qq * v;
                h.terms.at(lm) = cone;
                return h;
            }
            if (unit) { // a unit is forced to vanish
                sys.inconsistent = true;
                return std::nullopt;
            }
            emit_equality(q);
            h.terms.erase(lm);
        }
        return std::nullopt;
    };

    for (auto& g : gens) {
        auto r = process(g);
        if (sys.inconsistent) return sys;
        if (r) basis.push_back(*r);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
    int spairs = 0;
    while (!pairs.empty()) {
        if (spairs >= budget) {
            sys.budget_exhausted = true;
            break;
        }
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Monomial fi = basis[i].lead(o), fj = basis[j].lead(o);
        Monomial u = Monomial::lcm(fi, fj);
        if (u.degree() == fi.degree() + fj.degree()) continue; // coprime leads
        ++spairs;
        SymPoly s = sym_sub(sym_scale_shift(basis[i], u.div(fi), cone),
                            sym_scale_shift(basis[j], u.div(fj), cone));
        auto r = process(std::move(s));
        if (sys.inconsistent) return sys;
        if (r) {
            basis.push_back(*r);
            for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.push_back({k, basis.size() - 1});
        }
    }
    std::vector<Monomial> lms;
    for (auto& g : basis) lms.push_back(g.lead(o));
    sys.achieved = !sys.budget_exhausted &&
                   saturation(MonomialIdeal::make(4, lms)) == target;
    return sys;
}

namespace {

FieldElem eval_poly(const Polynomial& p, const std::vector<FieldElem>& vals, const Field& f) {
    FieldElem acc;
    for (auto& [m, c] : p.terms()) {
        FieldElem t = c;
        for (size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) t = fmul(t, vals[i], f);
        acc = fadd(acc, t);
    }
    return acc;
}

} // namespace

bool check_assignment(const ConstraintSystem& sys, const std::vector<FieldElem>& base_values) {
    if ((int)base_values.size() != sys.n_base)
        throw std::invalid_argument("check_assignment: value count mismatch");
    if (sys.inconsistent) return false;
    std::vector<FieldElem> vals(sys.cring.nvars, FieldElem(0));
    std::copy(base_values.begin(), base_values.end(), vals.begin());
    for (auto& [k, q] : sys.inverses) {
        FieldElem v = eval_poly(q, vals, sys.cring.field);
        if (v.is_zero()) return false;
        vals[k] = finv(v, sys.cring.field);
    }
    for (auto& q : sys.equalities)
        if (!eval_poly(q, vals, sys.cring.field).is_zero()) return false;
    return true;
}

std::optional<Polynomial> heuristic_solve(int l, int m, const MonomialIdeal& target,
                                          const TermOrder& o, uint64_t seed, int tries) {
    Ring r = Ring::rationals(4);
    auto support = generic_f_support(l, m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int t = 0; t < tries; ++t) {
        Polynomial F(r);
        for (auto& mon : support) {
            int c = coef(rng);
            if (c != 0) F.add_term(mon, FieldElem(c));
        }
        if (F.is_zero() || F.degree() != l + m - 1) continue;
        if (verify_witness(l, m, F, o, target).verified) return F;
    }
    return std::nullopt;
}

} // namespace boreldegen
