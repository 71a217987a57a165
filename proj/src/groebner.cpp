#include "boreldegen/groebner.hpp"
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace boreldegen {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& o) {
    const Field& F = f.ring().field;
    auto [mf, cf] = f.leading_term(o);
    auto [mg, cg] = g.leading_term(o);
    Monomial L = Monomial::lcm(mf, mg);
    return f.times_term(L.div(mf), finv(cf, F)) - g.times_term(L.div(mg), finv(cg, F));
}

namespace {
struct OrderGreater {
    const TermOrder* o;
    bool operator()(const Monomial& a, const Monomial& b) const { return o->greater(a, b); }
};
using WorkMap = std::map<Monomial, FieldElem, OrderGreater>;

void work_add(WorkMap& w, const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = w.emplace(m, c);
    if (!fresh) {
        it->second = fadd(it->second, c);
        if (it->second.is_zero()) w.erase(it);
    }
}
} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& o) {
    const Field& F = f.ring().field;
    std::vector<std::pair<Monomial, FieldElem>> lts;
    lts.reserve(G.size());
    for (auto& g : G) lts.push_back(g.leading_term(o));

    WorkMap work{OrderGreater{&o}};
    for (auto& [m, c] : f.terms()) work.emplace(m, c);
    Polynomial rem(f.ring());
    while (!work.empty()) {
        auto [m, c] = *work.begin();
        int hit = -1;
        for (size_t i = 0; i < G.size(); ++i)
            if (lts[i].first.divides(m)) { hit = (int)i; break; }
        if (hit < 0) {
            rem.add_term(m, c);
            work.erase(work.begin());
            continue;
        }
        FieldElem factor = fdiv(c, lts[hit].second, F);
        Monomial q = m.div(lts[hit].first);
        for (auto& [mg, cg] : G[hit].terms())
            work_add(work, mg * q, fneg(fmul(cg, factor, F)));
    }
    return rem;
}

std::vector<Polynomial> buchberger(const PolynomialIdeal& I, const TermOrder& o) {
    const Ring& R = I.ring;
    std::vector<Polynomial> G;
    std::vector<Monomial> lt;
    for (auto& g : I.gens)
        if (!g.is_zero()) {
            G.push_back(g.monic(o));
            lt.push_back(G.back().leading_term(o).first);
        }

    struct PairKey {
        int deg;
        Monomial lcm;
        int i, j;
    };
    auto key_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (auto c = canonical_cmp(a.lcm, b.lcm); c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PairKey> pending;
    std::set<std::pair<int, int>> pending_set;
    auto push_pair = [&](int i, int j) {
        Monomial L = Monomial::lcm(lt[i], lt[j]);
        pending.push_back({L.degree(), L, i, j});
        pending_set.insert({i, j});
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) push_pair((int)i, (int)j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), key_less);
        PairKey p = *it;
        *it = pending.back();
        pending.pop_back();
        pending_set.erase({p.i, p.j});

        // product criterion
        if (Monomial::gcd(lt[p.i], lt[p.j]).is_one()) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if ((int)k == p.i || (int)k == p.j || !lt[k].divides(p.lcm)) continue;
            auto mk = [&](int a, int b) {
                return a < b ? std::pair<int, int>(a, b) : std::pair<int, int>(b, a);
            };
            if (!pending_set.count(mk(p.i, (int)k)) && !pending_set.count(mk(p.j, (int)k)))
                skip = true;
        }
        if (skip) continue;

        Polynomial h = normal_form(s_polynomial(G[p.i], G[p.j], o), G, o);
        if (h.is_zero()) continue;
        h = h.monic(o);
        int idx = (int)G.size();
        G.push_back(h);
        lt.push_back(h.leading_term(o).first);
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // minimalize: drop elements whose LT is divisible by another LT
    std::vector<int> keep;
    for (size_t i = 0; i < G.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < G.size() && !red; ++j) {
            if (i == j) continue;
            if (lt[j].divides(lt[i]) && (lt[i] != lt[j] || j < i)) red = true;
        }
        if (!red) keep.push_back((int)i);
    }
    std::vector<Polynomial> M;
    for (int i : keep) M.push_back(G[i]);
    // interreduce tails
    std::vector<Polynomial> out;
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        Polynomial r = normal_form(M[i], others, o);
        if (!r.is_zero()) out.push_back(r.monic(o));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return o.less(a.leading_term(o).first, b.leading_term(o).first);
    });
    return out;
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gb, const Ring& r, const TermOrder& o) {
    std::vector<Monomial> lts;
    for (auto& g : gb) lts.push_back(g.leading_term(o).first);
    return MonomialIdeal::make(r.nvars, std::move(lts));
}

MonomialIdeal initial_ideal(const PolynomialIdeal& I, const TermOrder& o) {
    return initial_ideal(buchberger(I, o), I.ring, o);
}

Ring ring_with_front_var(const Ring& r, const std::string& name) {
    std::vector<std::string> names{name};
    names.insert(names.end(), r.names.begin(), r.names.end());
    Ring out = Ring::rationals(r.nvars + 1, std::move(names));
    out.field = r.field;
    return out;
}

Polynomial lift_front(const Polynomial& p, const Ring& target) {
    std::vector<int> image(p.ring().nvars);
    for (int i = 0; i < p.ring().nvars; ++i) image[i] = i + 1;
    return p.map_vars(target, image);
}

Polynomial drop_front(const Polynomial& p, const Ring& target) {
    std::vector<int> image(p.ring().nvars);
    image[0] = -1;
    for (int i = 1; i < p.ring().nvars; ++i) image[i] = i - 1;
    return p.map_vars(target, image);
}

PolynomialIdeal saturate_by(const PolynomialIdeal& I, const Polynomial& f) {
    Ring ext = ring_with_front_var(I.ring, "V_");
    std::vector<Polynomial> gens;
    for (auto& g : I.gens) gens.push_back(lift_front(g, ext));
    Polynomial rel = Polynomial::variable(ext, 0) * lift_front(f, ext) -
                     Polynomial::constant(ext, FieldElem(1));
    gens.push_back(rel);
    TermOrder elim = TermOrder::eliminate_front(1, TermOrder::degrevlex(I.ring.nvars));
    auto gb = buchberger({ext, gens}, elim);
    PolynomialIdeal out{I.ring, {}};
    for (auto& g : gb) {
        bool has_v = false;
        for (auto& [m, c] : g.terms())
            if (m.e[0] != 0) { has_v = true; break; }
        if (!has_v) out.gens.push_back(drop_front(g, I.ring));
    }
    return out;
}

FlatLimit flat_limit(const PolynomialIdeal& I_with_u) {
    const Ring& ext = I_with_u.ring;
    int n = ext.nvars;
    Ring base = Ring::rationals(ext.nvars - 1,
                                std::vector<std::string>(ext.names.begin() + 1, ext.names.end()));
    base.field = ext.field;
    // Saturating by u^B (B = largest u-exponent among the generators) yields
    // the same ideal as saturating by u, but the auxiliary relation V*u^B - 1
    // cancels u-powers in one chunk instead of one at a time, which matters
    // when the generators carry large u-exponents.
    int bigb = 1;
    for (auto& g : I_with_u.gens)
        for (auto& [m, c] : g.terms()) bigb = std::max(bigb, m.e[0]);
    std::vector<int> ue(n, 0);
    ue[0] = bigb;
    Polynomial upow = Polynomial::monomial(ext, Monomial(ue));
    PolynomialIdeal J = saturate_by(I_with_u, upow);
    std::vector<Polynomial> at0;
    for (auto& g : J.gens) {
        Polynomial h = g.substitute(0, Polynomial::zero(ext));
        if (!h.is_zero()) at0.push_back(drop_front(h, base));
    }
    FlatLimit out;
    out.ring = base;
    out.basis = buchberger({base, at0}, TermOrder::degrevlex(base.nvars));
    out.monomial = true;
    std::vector<Monomial> gens;
    for (auto& g : out.basis) {
        if (!g.is_monomial()) out.monomial = false;
        else gens.push_back(g.terms().begin()->first);
    }
    if (out.monomial) out.ideal = MonomialIdeal::make(base.nvars, std::move(gens));
    return out;
}

MonomialIdeal z_transform(const MonomialIdeal& I, uint64_t seed) {
    if (I.nvars != 4) throw std::invalid_argument("z_transform: needs 4 variables");
    Ring R = Ring::rationals(4);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(2, 1000000);
    MonomialIdeal got;
    for (int run = 0; run < 2; ++run) {
        long a = dist(rng);
        Polynomial w_image = Polynomial::variable(R, 3) +
                             Polynomial::variable(R, 2).scaled(FieldElem(Rational(a)));
        std::vector<Polynomial> gens;
        for (auto& m : I.gens)
            gens.push_back(Polynomial::monomial(R, m).substitute(3, w_image));
        TermOrder o = run == 0 ? TermOrder::degrevlex(4) : TermOrder::grlex(4);
        MonomialIdeal J = initial_ideal({R, gens}, o);
        if (run == 0) got = J;
        else if (!(got == J))
            throw std::runtime_error("z_transform: runs with independent parameters disagree");
    }
    return got;
}

} // namespace boreldegen
