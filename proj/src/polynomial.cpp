#include "boreldegen/polynomial.hpp"
#include <sstream>
#include <stdexcept>

namespace boreldegen {

std::string fstr(const FieldElem& x, const Field& F) {
    std::ostringstream os;
    if (x.is_zero()) return "0";
    if (x.b == 0) {
        os << x.a.get_str();
    } else if (x.a == 0) {
        if (x.b == 1) os << "sqrt(" << F.radicand << ")";
        else if (x.b == -1) os << "-sqrt(" << F.radicand << ")";
        else os << x.b.get_str() << "*sqrt(" << F.radicand << ")";
    } else {
        os << "(" << x.a.get_str();
        if (x.b > 0) os << "+";
        if (x.b == 1) os << "sqrt(" << F.radicand << ")";
        else if (x.b == -1) os << "-sqrt(" << F.radicand << ")";
        else os << x.b.get_str() << "*sqrt(" << F.radicand << ")";
        os << ")";
    }
    return os.str();
}

std::vector<std::string> Ring::default_names(int nvars) {
    if (nvars == 4) return {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Ring Ring::rationals(int nvars) { return rationals(nvars, default_names(nvars)); }
Ring Ring::rationals(int nvars, std::vector<std::string> names) {
    Ring r;
    r.nvars = nvars;
    r.names = std::move(names);
    if ((int)r.names.size() != nvars) throw std::invalid_argument("ring: name count mismatch");
    return r;
}
Ring Ring::quadratic(int nvars, long radicand) {
    Ring r = rationals(nvars);
    r.field.radicand = radicand;
    return r;
}

Polynomial Polynomial::constant(const Ring& r, const FieldElem& c) {
    return term(r, Monomial::one(r.nvars), c);
}

Polynomial Polynomial::term(const Ring& r, const Monomial& m, const FieldElem& c) {
    Polynomial p(r);
    if (m.nvars() != r.nvars) throw std::invalid_argument("term: wrong variable count");
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -1;
    for (auto& [m, c] : terms_) {
        if (d < 0) d = m.degree();
        else if (m.degree() != d) return false;
    }
    return true;
}

FieldElem Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second = fadd(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}
Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, fneg(c));
    return r;
}
Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, fneg(c));
    return r;
}
Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(ring_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, fmul(c1, c2, ring_.field));
    return r;
}
Polynomial Polynomial::scaled(const FieldElem& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, fmul(k, c, ring_.field));
    return r;
}
Polynomial Polynomial::times_term(const Monomial& m, const FieldElem& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m0, k] : terms_) r.terms_.emplace(m0 * m, fmul(k, c, ring_.field));
    return r;
}

std::pair<Monomial, FieldElem> Polynomial::leading_term(const TermOrder& o) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (o.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::monic(const TermOrder& o) const {
    if (is_zero()) return *this;
    auto [m, c] = leading_term(o);
    return scaled(finv(c, ring_.field));
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    Polynomial r(ring_);
    std::vector<Polynomial> powers{Polynomial::constant(ring_, FieldElem(1))};
    for (auto& [m, c] : terms_) {
        int k = m.e[var];
        while ((int)powers.size() <= k) powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest.e[var] = 0;
        r = r + powers[k].times_term(rest, c);
    }
    return r;
}

Polynomial Polynomial::map_vars(const Ring& target, const std::vector<int>& image) const {
    if ((int)image.size() != ring_.nvars)
        throw std::invalid_argument("map_vars: image size mismatch");
    Polynomial r(target);
    for (auto& [m, c] : terms_) {
        Monomial t = Monomial::one(target.nvars);
        for (int i = 0; i < ring_.nvars; ++i) {
            if (m.e[i] == 0) continue;
            if (image[i] < 0)
                throw std::domain_error("map_vars: eliminated variable occurs");
            t.e[image[i]] += m.e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string monomial_to_string(const Monomial& m, const Ring& r) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < m.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (any) os << "*";
        os << r.names[i];
        if (m.e[i] != 1) os << "^" << m.e[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = fstr(c, ring_.field);
        bool neg = !cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                   cs.find('-', 1) == std::string::npos;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string body = neg ? cs.substr(1) : cs;
        if (m.is_one()) os << body;
        else if (body == "1") os << monomial_to_string(m, ring_);
        else os << body << "*" << monomial_to_string(m, ring_);
        first = false;
    }
    return os.str();
}

} // namespace boreldegen
