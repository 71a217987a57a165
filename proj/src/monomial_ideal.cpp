#include "boreldegen/monomial_ideal.hpp"
#include "boreldegen/polynomial.hpp"
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boreldegen {

long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    if (!r.fits_slong_p()) throw std::overflow_error("binom overflow");
    return r.get_si();
}

Rational HilbertPolynomial::eval(long t) const {
    Rational v = 0, p = 1;
    for (auto& c : coeffs) {
        v += c * p;
        p *= t;
    }
    return v;
}

HilbertPolynomial HilbertPolynomial::operator-(const HilbertPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs.size(), o.coeffs.size()), Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
    return HilbertPolynomial(std::move(c));
}

std::string HilbertPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) {
        if (coeffs[i] == 0) continue;
        Rational c = coeffs[i];
        if (!first) {
            os << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) os << c.get_str();
        if (i == 1) os << "t";
        else if (i > 1) os << "t^" << i;
        first = false;
    }
    return os.str();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool redundant = false;
        for (auto& g : out)
            if (g.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), CanonicalGreater());
    return out;
}

MonomialIdeal MonomialIdeal::make(int nvars, std::vector<Monomial> gens) {
    for (auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("monomial ideal: nvars mismatch");
    MonomialIdeal I;
    I.nvars = nvars;
    I.gens = minimalize(std::move(gens));
    return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& o) const {
    for (auto& g : o.gens)
        if (!contains(g)) return false;
    return true;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (auto& g : gens) d = std::max(d, g.degree());
    return d;
}

std::string MonomialIdeal::to_string(const Ring& r) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens.size(); ++i)
        os << (i ? ", " : "") << monomial_to_string(gens[i], r);
    os << ")";
    return os.str();
}
std::string MonomialIdeal::to_string() const {
    return to_string(Ring::rationals(nvars));
}

bool is_borel_fixed(const MonomialIdeal& I) {
    for (auto& g : I.gens)
        for (int j = 1; j < I.nvars; ++j) {
            if (g.e[j] == 0) continue;
            Monomial m = g;
            m.e[j] -= 1;
            m.e[j - 1] += 1;
            if (!I.contains(m)) return false;
        }
    return true;
}

MonomialIdeal borel_closure(const MonomialIdeal& I) {
    std::vector<Monomial> all = I.gens;
    std::vector<Monomial> queue = I.gens;
    MonomialIdeal cur = I;
    while (!queue.empty()) {
        Monomial g = queue.back();
        queue.pop_back();
        for (int j = 1; j < I.nvars; ++j) {
            if (g.e[j] == 0) continue;
            Monomial m = g;
            m.e[j] -= 1;
            m.e[j - 1] += 1;
            if (!cur.contains(m)) {
                all.push_back(m);
                queue.push_back(m);
                cur = MonomialIdeal::make(I.nvars, all);
            }
        }
    }
    return MonomialIdeal::make(I.nvars, all);
}

MonomialIdeal colon_var_power(const MonomialIdeal& I, int var) {
    std::vector<Monomial> g = I.gens;
    for (auto& m : g) m.e[var] = 0;
    return MonomialIdeal::make(I.nvars, std::move(g));
}

MonomialIdeal monomial_intersection(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<Monomial> g;
    for (auto& a : A.gens)
        for (auto& b : B.gens) g.push_back(Monomial::lcm(a, b));
    return MonomialIdeal::make(A.nvars, std::move(g));
}

MonomialIdeal saturation(const MonomialIdeal& I) {
    if (I.gens.empty()) return I;
    MonomialIdeal r = colon_var_power(I, 0);
    for (int v = 1; v < I.nvars; ++v)
        r = monomial_intersection(r, colon_var_power(I, v));
    return r;
}

MonomialIdeal z_transform_image(const MonomialIdeal& I) {
    if (I.nvars != 4) throw std::invalid_argument("z_transform_image: needs 4 variables");
    std::vector<Monomial> g = I.gens;
    for (auto& m : g) {
        m.e[2] += m.e[3];
        m.e[3] = 0;
    }
    return MonomialIdeal::make(4, std::move(g));
}

namespace {
long hf_rec(const std::vector<Monomial>& gens, size_t start, const Monomial& lcm,
            int sign, int d, int nvars) {
    long total = 0;
    for (size_t i = start; i < gens.size(); ++i) {
        Monomial L = Monomial::lcm(lcm, gens[i]);
        int dl = L.degree();
        if (dl > d) continue; // supersets only grow the lcm
        total += sign * binom(d - dl + nvars - 1, nvars - 1);
        total += hf_rec(gens, i + 1, L, -sign, d, nvars);
    }
    return total;
}
} // namespace

long hf_ideal(const MonomialIdeal& I, int d) {
    if (d < 0) return 0;
    return hf_rec(I.gens, 0, Monomial::one(I.nvars), 1, d, I.nvars);
}

long hf_quotient(const MonomialIdeal& I, int d) {
    if (d < 0) return 0;
    return binom(d + I.nvars - 1, I.nvars - 1) - hf_ideal(I, d);
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(nvars);
    // lexicographically descending by construction
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            m.e[var] = rem;
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            m.e[var] = k;
            self(self, var + 1, rem - k);
        }
        m.e[var] = 0;
    };
    if (d >= 0) rec(rec, 0, d);
    return out;
}

long hf_ideal_enumerate(const MonomialIdeal& I, int d) {
    long n = 0;
    for (auto& m : monomials_of_degree(I.nvars, d))
        if (I.contains(m)) ++n;
    return n;
}

HilbertPolynomial hilbert_polynomial_quotient(const MonomialIdeal& I) {
    int n = I.nvars;
    long w0 = I.max_gen_degree() + n + 1;
    for (int attempt = 0; attempt < 5; ++attempt, w0 += 2) {
        int k = n + 1; // fit degree <= n
        std::vector<Rational> vals;
        for (int j = 0; j < k; ++j) vals.emplace_back(hf_quotient(I, (int)(w0 + j)));
        // Newton forward differences
        std::vector<Rational> diff = vals;
        std::vector<Rational> lead;
        for (int j = 0; j < k; ++j) {
            lead.push_back(diff[0]);
            for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
        }
        // p(t) = sum_j lead[j] * C(t - w0, j)
        std::vector<Rational> coeffs(k, Rational(0));
        std::vector<Rational> basis{Rational(1)}; // product so far
        Rational fact = 1;
        for (int j = 0; j < k; ++j) {
            if (j > 0) {
                // multiply basis by (t - w0 - (j-1))
                std::vector<Rational> nb(basis.size() + 1, Rational(0));
                Rational c0 = Rational(-(w0 + j - 1));
                for (size_t i = 0; i < basis.size(); ++i) {
                    nb[i] += basis[i] * c0;
                    nb[i + 1] += basis[i];
                }
                basis = std::move(nb);
                fact *= j;
            }
            for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += lead[j] * basis[i] / fact;
        }
        HilbertPolynomial p{std::move(coeffs)};
        if (p.eval(w0 + k) == hf_quotient(I, (int)(w0 + k)) &&
            p.eval(w0 + k + 1) == hf_quotient(I, (int)(w0 + k + 1)))
            return p;
    }
    throw std::runtime_error("hilbert polynomial interpolation failed to stabilize");
}

long gotzmann_number(const HilbertPolynomial& p) {
    if (p.degree() > 1)
        throw std::invalid_argument("gotzmann_number: only polynomials of degree <= 1 supported");
    Rational dq = p.degree() >= 1 ? p.coeffs[1] : Rational(0);
    Rational cq = p.degree() >= 0 ? p.coeffs[0] : Rational(0);
    if (dq.get_den() != 1 || cq.get_den() != 1)
        throw std::invalid_argument("not a Hilbert polynomial: non-integer coefficients");
    long d = dq.get_num().get_si(), c = cq.get_num().get_si();
    if (d < 0) throw std::invalid_argument("not a Hilbert polynomial: negative degree term");
    if (d == 0) {
        if (c < 0) throw std::invalid_argument("not a Hilbert polynomial");
        return c;
    }
    long r = c - d + d * (d + 1) / 2;
    if (r < d) throw std::invalid_argument("not a Hilbert polynomial of a subscheme");
    return r;
}

long regularity_borel(const MonomialIdeal& I) {
    if (!is_borel_fixed(I))
        throw std::invalid_argument("regularity_borel: ideal is not Borel-fixed");
    return I.max_gen_degree();
}

MonomialIdeal lex_segment_ideal(const HilbertPolynomial& p, int nvars) {
    if (nvars < 3) throw std::invalid_argument("lex_segment_ideal: need at least 3 variables");
    if (p.degree() > 1) throw std::invalid_argument("lex_segment_ideal: deg p <= 1 only");
    long r = gotzmann_number(p);
    long d = p.degree() >= 1 ? p.coeffs[1].get_num().get_si() : 0;
    int n = nvars;
    std::vector<Monomial> gens;
    if (d == 0) {
        if (r == 0) return MonomialIdeal::make(n, {Monomial::one(n)}); // empty scheme
        for (int i = 0; i <= n - 3; ++i) gens.push_back(Monomial::var(n, i));
        gens.push_back(Monomial::var(n, n - 2, (int)r));
    } else {
        for (int i = 0; i <= n - 4; ++i) gens.push_back(Monomial::var(n, i));
        gens.push_back(Monomial::var(n, n - 3, (int)d + 1));
        Monomial m = Monomial::var(n, n - 3, (int)d);
        m.e[n - 2] = (int)(r - d);
        gens.push_back(m);
    }
    MonomialIdeal L = MonomialIdeal::make(n, std::move(gens));
    if (!(hilbert_polynomial_quotient(L) == p))
        throw std::logic_error("lex_segment_ideal: Hilbert polynomial mismatch");
    return L;
}

} // namespace boreldegen
