#include "boreldegen/borel_enum.hpp"
#include <algorithm>
#include <stdexcept>

namespace boreldegen {

namespace {

// slices live in the first k = nvars-1 variables; a saturated Borel ideal
// has no generator involving the last variable
struct Enumerator {
    int k;        // slice variable count
    int nvars;
    long d, c, r; // quotient HP d*t + c, Gotzmann number r
    long target;  // sum of slice quotient sizes for t = 0..r
    std::vector<std::vector<Monomial>> degree_monomials; // lex descending
    std::vector<std::vector<Monomial>> chain;            // B_t per degree
    std::vector<MonomialIdeal> found;

    static bool lex_greater(const Monomial& a, const Monomial& b) {
        return a.e > b.e;
    }

    std::vector<Monomial> shift(const std::vector<Monomial>& B) {
        std::vector<Monomial> out;
        for (auto& m : B)
            for (int i = 0; i < k; ++i) {
                Monomial t = m;
                t.e[i] += 1;
                out.push_back(t);
            }
        std::sort(out.begin(), out.end(), lex_greater);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static bool member(const std::vector<Monomial>& B, const Monomial& m) {
        auto it = std::lower_bound(B.begin(), B.end(), m, lex_greater);
        return it != B.end() && *it == m;
    }

    // all up-moves (x_j -> x_{j-1}) of m present in B?
    bool up_closed(const std::vector<Monomial>& B, const Monomial& m) {
        for (int j = 1; j < k; ++j) {
            if (m.e[j] == 0) continue;
            Monomial u = m;
            u.e[j] -= 1;
            u.e[j - 1] += 1;
            if (!member(B, u)) return false;
        }
        return true;
    }

    long slice_total(long t) { return binom(t + k - 1, k - 1); }

    void emit() {
        std::vector<Monomial> gens;
        for (long t = 1; t <= r; ++t) {
            std::vector<Monomial> prev_shift = shift(chain[t - 1]);
            for (auto& m : chain[t])
                if (!member(prev_shift, m)) {
                    Monomial g = Monomial::one(nvars);
                    for (int i = 0; i < k; ++i) g.e[i] = m.e[i];
                    gens.push_back(g);
                }
        }
        found.push_back(MonomialIdeal::make(nvars, std::move(gens)));
    }

    void next_degree(long t, long partial) {
        if (t > r) return; // handled at t == r
        std::vector<Monomial> forced = shift(chain[t - 1]);
        const auto& all = degree_monomials[t];
        // candidates: monomials not forced, in lex descending order
        std::vector<Monomial> cand;
        for (auto& m : all)
            if (!member(forced, m)) cand.push_back(m);
        long prev_h = slice_total(t - 1) - (long)chain[t - 1].size();
        bool prev_regime = prev_h <= t - 1;
        std::vector<Monomial> chosen;
        extend(t, partial, forced, cand, 0, 0, chosen, prev_regime ? prev_h : -1);
    }

    void finish_slice(long t, long partial, std::vector<Monomial> B) {
        long h = slice_total(t) - (long)B.size();
        if (h <= t && h < d) return;          // Macaulay: can never climb back
        long total = partial + h;
        if (total > target) return;
        // optimistic upper bound for the remaining degrees
        long ub = total, lb = total;
        for (long s = t + 1; s <= r; ++s) {
            ub += (h <= t) ? h : slice_total(s);
            lb += (s >= d) ? d : 0;
        }
        if (ub < target || lb > target) return;
        chain.push_back(std::move(B));
        if (t == r) {
            if (h == d && total == target) {
                // persistence for two further degrees
                std::vector<Monomial> s1 = shift(chain[r]);
                std::vector<Monomial> s2 = shift(s1);
                if (slice_total(r + 1) - (long)s1.size() == d &&
                    slice_total(r + 2) - (long)s2.size() == d)
                    emit();
            }
        } else {
            next_degree(t + 1, total);
        }
        chain.pop_back();
    }

    void extend(long t, long partial, const std::vector<Monomial>& forced,
                const std::vector<Monomial>& cand, size_t i, long excluded,
                std::vector<Monomial>& chosen, long max_excl /*-1 = unbounded*/) {
        if (max_excl >= 0 && excluded > max_excl) return;
        if (t >= d && excluded + (long)(cand.size() - i) < d) return;
        if (i == cand.size()) {
            std::vector<Monomial> B(forced);
            B.insert(B.end(), chosen.begin(), chosen.end());
            std::sort(B.begin(), B.end(), lex_greater);
            finish_slice(t, partial, std::move(B));
            return;
        }
        // include cand[i] if its up-moves are all present
        bool can_include = true;
        for (int j = 1; j < k && can_include; ++j) {
            if (cand[i].e[j] == 0) continue;
            Monomial u = cand[i];
            u.e[j] -= 1;
            u.e[j - 1] += 1;
            if (!member(forced, u) &&
                std::find(chosen.begin(), chosen.end(), u) == chosen.end())
                can_include = false;
        }
        if (can_include) {
            chosen.push_back(cand[i]);
            extend(t, partial, forced, cand, i + 1, excluded, chosen, max_excl);
            chosen.pop_back();
        }
        extend(t, partial, forced, cand, i + 1, excluded + 1, chosen, max_excl);
    }

    void run() {
        degree_monomials.resize(r + 3);
        for (long t = 0; t <= r + 2; ++t) {
            degree_monomials[t] = monomials_of_degree(k, (int)t);
            std::sort(degree_monomials[t].begin(), degree_monomials[t].end(), lex_greater);
        }
        chain.clear();
        chain.push_back({}); // degree 0: quotient contains 1
        if (r == 0) {
            if (target == 1 && d == 0) emit();
            return;
        }
        next_degree(1, 1);
    }
};

} // namespace

bool catalog_precedes(const MonomialIdeal& a, const MonomialIdeal& b) {
    size_t n = std::min(a.gens.size(), b.gens.size());
    for (size_t i = 0; i < n; ++i)
        if (auto c = canonical_cmp(a.gens[i], b.gens[i]); c != 0) return c > 0;
    return a.gens.size() > b.gens.size();
}

BorelCatalog enumerate_saturated_borel(const HilbertPolynomial& p, int nvars) {
    if (nvars < 3) throw std::invalid_argument("enumerate_saturated_borel: nvars >= 3");
    if (p.degree() > 1)
        throw std::invalid_argument("enumerate_saturated_borel: deg p <= 1 only");
    Enumerator E;
    E.k = nvars - 1;
    E.nvars = nvars;
    E.r = gotzmann_number(p); // also validates p
    E.d = p.degree() >= 1 ? p.coeffs[1].get_num().get_si() : 0;
    E.c = p.degree() >= 0 && !p.coeffs.empty() ? p.coeffs[0].get_num().get_si() : 0;
    E.target = E.r * E.d + E.c;
    E.run();
    std::sort(E.found.begin(), E.found.end(), catalog_precedes);
    BorelCatalog cat;
    cat.p = p;
    cat.nvars = nvars;
    cat.entries = std::move(E.found);
    return cat;
}

int catalog_label(const BorelCatalog& c, const MonomialIdeal& I) {
    for (size_t i = 0; i < c.entries.size(); ++i)
        if (c.entries[i] == I) return (int)i + 1;
    throw std::invalid_argument("ideal not present in catalogue");
}

} // namespace boreldegen
