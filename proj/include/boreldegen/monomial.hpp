#pragma once
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace boreldegen {

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i, int pow = 1) {
        Monomial m = one(nvars);
        m.e.at(i) = pow;
        return m;
    }

    int nvars() const { return (int)e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (int x : e) if (x) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Monomial div(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) {
            r.e[i] -= o.e[i];
            if (r.e[i] < 0) throw std::domain_error("monomial division not exact");
        }
        return r;
    }
    bool operator==(const Monomial&) const = default;

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
        return r;
    }
};

// Canonical storage/printing order: by degree, then exponent vector
// lexicographically (earlier variables first).  This is graded lex.
inline std::strong_ordering canonical_cmp(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
    return std::strong_ordering::equal;
}
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    return canonical_cmp(a, b) < 0;
}

struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_cmp(a, b) > 0;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int x : m.e) { h ^= (size_t)(x + 1); h *= 1099511628211ull; }
        return h;
    }
};

} // namespace boreldegen
