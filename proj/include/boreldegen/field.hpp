#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace boreldegen {

using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; use this for literal fractions.
inline Rational ratio(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Field descriptor: radicand 0 means plain Q, otherwise Q(sqrt(d)) with d
// a non-square integer (we only ever need square-free d such as 7).
struct Field {
    long radicand = 0;
    bool operator==(const Field&) const = default;
};

// a + b*sqrt(d); b is identically zero over plain Q.
struct FieldElem {
    Rational a, b;
    FieldElem() : a(0), b(0) {}
    FieldElem(long v) : a(v), b(0) {}
    FieldElem(Rational v) : a(std::move(v)), b(0) {}
    FieldElem(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool operator==(const FieldElem&) const = default;
};

inline FieldElem fadd(const FieldElem& x, const FieldElem& y) {
    return {x.a + y.a, x.b + y.b};
}
inline FieldElem fsub(const FieldElem& x, const FieldElem& y) {
    return {x.a - y.a, x.b - y.b};
}
inline FieldElem fneg(const FieldElem& x) { return {-x.a, -x.b}; }

inline FieldElem fmul(const FieldElem& x, const FieldElem& y, const Field& F) {
    if (x.b != 0 && y.b != 0 && F.radicand == 0)
        throw std::logic_error("sqrt part outside extension field");
    return {x.a * y.a + x.b * y.b * F.radicand, x.a * y.b + x.b * y.a};
}

inline FieldElem finv(const FieldElem& x, const Field& F) {
    if (x.is_zero()) throw std::domain_error("division by zero");
    if (x.b == 0) return {1 / x.a, Rational(0)};
    Rational n = x.a * x.a - x.b * x.b * F.radicand;
    if (n == 0) throw std::domain_error("non-invertible element (radicand is a square?)");
    return {x.a / n, -x.b / n};
}

inline FieldElem fdiv(const FieldElem& x, const FieldElem& y, const Field& F) {
    return fmul(x, finv(y, F), F);
}

std::string fstr(const FieldElem& x, const Field& F);

} // namespace boreldegen
