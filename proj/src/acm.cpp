#include "boreldegen/acm.hpp"
#include <numeric>
#include <stdexcept>

namespace boreldegen {

namespace {
Monomial xyzw(int nvars, int ex, int ey, int ez, int ew) {
    Monomial m = Monomial::one(nvars);
    m.e[0] = ex;
    m.e[1] = ey;
    if (nvars > 2) m.e[2] = ez;
    if (nvars > 3) m.e[3] = ew;
    return m;
}
} // namespace

MonomialIdeal j_ab(const AcmBorelSpec& spec, int nvars) {
    if (spec.a <= 0 || (int)spec.b.size() != spec.a)
        throw std::invalid_argument("j_ab: need a > 0 and a exponents b_1..b_a");
    int prev = 0;
    for (int bi : spec.b) {
        if (bi <= prev) throw std::invalid_argument("j_ab: b must be strictly increasing from 0");
        prev = bi;
    }
    std::vector<Monomial> gens;
    gens.push_back(xyzw(nvars, spec.a, 0, 0, 0));
    for (int i = 1; i <= spec.a; ++i)
        gens.push_back(xyzw(nvars, spec.a - i, spec.b[i - 1], 0, 0));
    return MonomialIdeal::make(nvars, std::move(gens));
}

MonomialIdeal quadric_acm_ideal(int l, int m) {
    return j_ab(AcmBorelSpec{2, {l, l + m}}, 4);
}

bool QuadricCandidateSpec::valid() const {
    if (l < 1 || m < 1 || p < 0 || p > l) return false;
    if ((int)a.size() != p || (int)b.size() != l - p) return false;
    auto ok = [&](const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) return false;
            if (i > 0 && v[i] > v[i - 1]) return false;
            if (strict && i > 0 && v[i] == v[i - 1] && v[i] != 0) return false;
        }
        return true;
    };
    return ok(a) && ok(b);
}

MonomialIdeal candidate_ideal(const QuadricCandidateSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("candidate_ideal: invalid spec");
    const int l = spec.l, m = spec.m, p = spec.p;
    std::vector<Monomial> gens;
    gens.push_back(xyzw(4, 2, 0, 0, 0));
    for (int k = 0; k < p; ++k)
        gens.push_back(xyzw(4, 1, l - p + k, spec.a[k], 0));
    gens.push_back(xyzw(4, 1, l, 0, 0));
    for (int k = p; k < l; ++k)
        gens.push_back(xyzw(4, 0, l + m + k, spec.b[k - p], 0));
    gens.push_back(xyzw(4, 0, 2 * l + m, 0, 0));
    return MonomialIdeal::make(4, std::move(gens));
}

bool hp_sum_condition(const QuadricCandidateSpec& spec) {
    long lhs = std::accumulate(spec.a.begin(), spec.a.end(), 0L) +
               std::accumulate(spec.b.begin(), spec.b.end(), 0L);
    long rhs = (long)spec.p * spec.m + (long)spec.p * (spec.p - 1);
    return lhs == rhs;
}

bool necessary_condition_c1(const MonomialIdeal& J, const AcmBorelSpec& spec) {
    long d = 0;
    for (int s = 0; s <= spec.a; ++s) {
        if (s > 0) d += spec.b[s - 1];
        if (!J.contains(xyzw(J.nvars, spec.a - s, (int)d, 0, 0))) return false;
    }
    return true;
}

bool condition_c2(const MonomialIdeal& J, const MonomialIdeal& ref) {
    HilbertPolynomial p = hilbert_polynomial_quotient(J);
    if (p != hilbert_polynomial_quotient(ref))
        throw std::invalid_argument("condition_c2: Hilbert polynomial mismatch");
    long r = gotzmann_number(p);
    for (long d = 0; d <= r; ++d)
        if (hf_ideal(J, (int)d) < hf_ideal(ref, (int)d)) return false;
    return true;
}

FilterResult filter_candidates(int l, int m) {
    MonomialIdeal ref = quadric_acm_ideal(l, m);
    FilterResult res;
    res.catalog = enumerate_saturated_borel(hilbert_polynomial_quotient(ref), 4);
    // The filter's C1 is only the top corner y^(2l+m); the full ladder test
    // (necessary_condition_c1) is strictly stronger and not what the
    // published survivor counts use.
    Monomial corner = xyzw(4, 0, 2 * l + m, 0, 0);
    for (const MonomialIdeal& J : res.catalog.entries) {
        if (!J.contains(corner))
            res.failing_c1.push_back(J);
        else if (!condition_c2(J, ref))
            res.failing_c2.push_back(J);
        else
            res.passing.push_back(J);
    }
    return res;
}

QuadricCandidateSpec predicted_p1(int l, int m, int i) {
    if (i < 0 || i > m) throw std::invalid_argument("predicted_p1: need 0 <= i <= m");
    if (l < 2 && i != 0) throw std::invalid_argument("predicted_p1: i > 0 needs l >= 2");
    QuadricCandidateSpec spec;
    spec.l = l;
    spec.m = m;
    spec.p = 1;
    spec.a = {m - i};
    spec.b.assign(l - 1, 0);
    if (l >= 2) spec.b[0] = i;
    return spec;
}

std::pair<QuadricCandidateSpec, bool> predicted_p2(int l, int m, int a0, int a1, int b2) {
    if (l < 2) throw std::invalid_argument("predicted_p2: need l >= 2");
    if (a0 + a1 + b2 != 2 * m + 2)
        throw std::invalid_argument("predicted_p2: need a0 + a1 + b2 = 2m + 2");
    QuadricCandidateSpec spec;
    spec.l = l;
    spec.m = m;
    spec.p = 2;
    spec.a = {a0, a1};
    spec.b.assign(l - 2, 0);
    if (l >= 3) spec.b[0] = b2;
    bool ok = a0 >= m + 2 || (a0 <= m + 2 && (a0 - a1) % 2 == 0);
    return {spec, ok};
}

std::pair<QuadricCandidateSpec, int> predicted_p3(int l, int m, int a0, int a1, int a2) {
    if (l < 3) throw std::invalid_argument("predicted_p3: need l >= 3");
    if (a0 + a1 + a2 != 3 * m + 6)
        throw std::invalid_argument("predicted_p3: need a0 + a1 + a2 = 3m + 6");
    if (a0 < a1 || a1 < a2 || a2 < 0)
        throw std::invalid_argument("predicted_p3: need a0 >= a1 >= a2 >= 0");
    QuadricCandidateSpec spec;
    spec.l = l;
    spec.m = m;
    spec.p = 3;
    spec.a = {a0, a1, a2};
    spec.b.assign(l - 3, 0);
    int which = 0;
    if (a1 < m + 2) {
        if (!(a2 == a1 - 1 && 3 * a1 <= 2 * m + 4)) which = 1;
    } else if (a1 == m + 2) {
        if (a2 <= m) which = 2;
    } else {
        // a = (m+2+e+a', m+2+e, m+2-2e-a') with e, a' > 0
        int e = a1 - (m + 2);
        int ap = a0 - a1;
        if (e > 0 && ap > 0 && m + 2 >= 2 * e + ap) {
            int q = ap;
            while (q % 2 == 0) q /= 2;
            int smallest_odd = 0;
            for (int f = 3; f <= q; f += 2)
                if (q % f == 0) { smallest_odd = f; break; }
            if (smallest_odd > 0 && smallest_odd * e <= ap) which = 3;
        }
    }
    return {spec, which};
}

std::vector<std::vector<int>> partitions(int total, int parts, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int left, int cap) -> void {
        if (left == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int v = std::min(cap, rem); v >= 0; --v) {
            if ((long)v * left < rem) break;
            cur.push_back(v);
            self(self, rem - v, left - 1, v);
            cur.pop_back();
        }
    };
    if (total >= 0 && parts >= 0 && max_part >= 0) rec(rec, total, parts, max_part);
    return out;
}

std::pair<QuadricCandidateSpec, bool> predicted_part(int l, int m, const std::vector<int>& p_vec) {
    if ((int)p_vec.size() != l) throw std::invalid_argument("predicted_part: need l exponents");
    for (int i = 0; i < l; ++i) {
        if (p_vec[i] < 0) throw std::invalid_argument("predicted_part: negative exponent");
        if (i > 0 && p_vec[i - 1] + (i - 1) > p_vec[i] + i)
            throw std::invalid_argument("predicted_part: need p_0 <= p_1 + 1 <= ...");
    }
    QuadricCandidateSpec spec;
    spec.l = l;
    spec.m = m;
    spec.p = l;
    spec.a.resize(l);
    for (int i = 0; i < l; ++i) {
        int pnext = (i + 1 < l) ? p_vec[i + 1] : 0;
        spec.a[i] = m + 2 * (l - 1 - i) + (l - 1 - i) * pnext - (l - i) * p_vec[i] + p_vec[0];
    }
    bool ok = true;
    for (int r = 1; r < l && ok; ++r) {
        long lhs = (long)r * p_vec[l - r];
        for (const auto& lam : partitions(r * (l - r), r, l - 1)) {
            long s = 0;
            for (int part : lam) s += p_vec[part];
            if (s > lhs) { ok = false; break; }
        }
    }
    return {spec, ok};
}

} // namespace boreldegen
