#include "boreldegen/segment.hpp"
#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace boreldegen {

namespace {

// Degree-first order refined by the weights, with reverse-lex style
// tie-break rows; a unit row is appended when the weight row is dependent.
TermOrder weight_order(int nvars, const std::vector<long>& w) {
    std::vector<std::vector<long long>> rows;
    rows.emplace_back(nvars, 1);
    rows.emplace_back(w.begin(), w.end());
    for (int i = nvars - 2; i >= 1; --i) {
        std::vector<long long> row(nvars, 0);
        row[i] = -1;
        rows.push_back(std::move(row));
    }
    try {
        return TermOrder(nvars, rows);
    } catch (const std::invalid_argument&) {
        std::vector<long long> row(nvars, 0);
        row[0] = 1;
        rows.push_back(std::move(row));
        return TermOrder(nvars, rows);
    }
}

} // namespace

std::optional<SegmentOrder> is_segment(const MonomialIdeal& J, int t) {
    if (t < 0) throw std::invalid_argument("is_segment: negative degree");
    const int n = J.nvars;
    std::vector<Monomial> inside, outside;
    for (Monomial& m : monomials_of_degree(n, t))
        (J.contains(m) ? inside : outside).push_back(std::move(m));

    std::vector<long> w(n, 0);
    if (!inside.empty() && !outside.empty()) {
        SeparationProblem prob;
        for (int iter = 0;; ++iter) {
            auto value = [&](const Monomial& m) {
                long long v = 0;
                for (int i = 0; i < n; ++i) v += (long long)w[i] * m.e[i];
                return v;
            };
            const Monomial* umin = &inside[0];
            for (const Monomial& m : inside)
                if (value(m) < value(*umin)) umin = &m;
            const Monomial* vmax = &outside[0];
            for (const Monomial& m : outside)
                if (value(m) > value(*vmax)) vmax = &m;
            if (value(*umin) > value(*vmax)) break;
            std::vector<long> row(n);
            for (int i = 0; i < n; ++i) row[i] = umin->e[i] - vmax->e[i];
            prob.rows.push_back(std::move(row));
            auto sol = strict_feasible(prob);
            if (!sol) return std::nullopt;
            w = *sol;
            if (iter > (int)(inside.size() * outside.size()))
                throw std::logic_error("is_segment: no convergence");
        }
    }
    return SegmentOrder{w, weight_order(n, w)};
}

std::optional<ProductObstruction> non_segment_certificate(const MonomialIdeal& J, int t) {
    const int n = J.nvars;
    std::vector<Monomial> inside, outside;
    for (Monomial& m : monomials_of_degree(n, t))
        (J.contains(m) ? inside : outside).push_back(std::move(m));
    std::unordered_set<Monomial, MonomialHash> in_set(inside.begin(), inside.end());
    for (const Monomial& u : outside) {
        for (const Monomial& m1 : inside) {
            Monomial m2 = Monomial::one(n);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                m2.e[i] = 2 * u.e[i] - m1.e[i];
                if (m2.e[i] < 0) { ok = false; break; }
            }
            if (ok && in_set.count(m2)) return ProductObstruction{u, m1, m2};
        }
    }
    return std::nullopt;
}

SegmentClass classify_segment(const MonomialIdeal& J) {
    long tg = gotzmann_number(hilbert_polynomial_quotient(J));
    long tr = regularity_borel(J);
    if (is_segment(J, (int)tg)) return {SegmentKind::hilbert, (int)tg};
    if (is_segment(J, (int)tr)) return {SegmentKind::reg, (int)tr};
    for (long t = tr - 1; t >= J.max_gen_degree(); --t)
        if (is_segment(J, (int)t)) return {SegmentKind::at, (int)t};
    return {SegmentKind::none, -1};
}

bool pluecker_nonzero(const PolynomialIdeal& I, const MonomialIdeal& J, int t) {
    const Ring& r = I.ring;
    if (r.nvars != J.nvars) throw std::invalid_argument("pluecker_nonzero: variable mismatch");
    TermOrder ord = TermOrder::degrevlex(r.nvars);
    std::vector<Polynomial> G = buchberger(I, ord);
    MonomialIdeal lead = initial_ideal(G, r, ord);
    if (hf_ideal(lead, t) != hf_ideal(J, t))
        throw std::invalid_argument("pluecker_nonzero: dimension mismatch");

    // Basis of I_t: one Groebner multiple per monomial of in(I)_t.
    std::vector<Polynomial> basis;
    for (const Monomial& u : monomials_of_degree(r.nvars, t)) {
        if (!lead.contains(u)) continue;
        for (const Polynomial& g : G) {
            auto [lt, lc] = g.leading_term(ord);
            if (!lt.divides(u)) continue;
            basis.push_back(g.times_term(u.div(lt), finv(lc, r.field)));
            break;
        }
    }

    std::vector<Monomial> cols;
    for (Monomial& m : monomials_of_degree(r.nvars, t))
        if (J.contains(m)) cols.push_back(std::move(m));
    const size_t d = cols.size();
    if (basis.size() != d) throw std::logic_error("pluecker_nonzero: basis size mismatch");

    std::vector<std::vector<FieldElem>> mat(d, std::vector<FieldElem>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) mat[i][j] = basis[i].coeff(cols[j]);

    // Exact Gaussian elimination; full rank iff the determinant is nonzero.
    size_t rank = 0;
    for (size_t col = 0; col < d && rank < d; ++col) {
        size_t piv = rank;
        while (piv < d && mat[piv][col].is_zero()) ++piv;
        if (piv == d) return false;
        std::swap(mat[rank], mat[piv]);
        for (size_t i = rank + 1; i < d; ++i) {
            if (mat[i][col].is_zero()) continue;
            FieldElem f = fdiv(mat[i][col], mat[rank][col], r.field);
            for (size_t j = col; j < d; ++j)
                mat[i][j] = fsub(mat[i][j], fmul(f, mat[rank][j], r.field));
        }
        ++rank;
    }
    return rank == d;
}

bool component_certificate(const PolynomialIdeal& I, const MonomialIdeal& J, int s, int t) {
    return is_segment(J, t).has_value() && pluecker_nonzero(I, J, s);
}

} // namespace boreldegen
