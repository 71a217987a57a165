#include "boreldegen/parse.hpp"
#include <cctype>
#include <stdexcept>

namespace boreldegen {

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;
    explicit Scanner(const std::string& t) : s(t) {}
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " +
                                    msg + " in \"" + s + "\"");
    }
    long integer() {
        skip();
        bool neg = accept('-');
        if (!std::isdigit((unsigned char)peek())) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
    std::string word() {
        skip();
        size_t j = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        return s.substr(j, i - j);
    }
};

int var_index(const Ring& r, const std::string& name, Scanner& sc) {
    for (int k = 0; k < r.nvars; ++k)
        if (r.names[k] == name) return k;
    sc.fail("unknown variable '" + name + "'");
}

// one product of factors; returns (monomial, coefficient)
std::pair<Monomial, FieldElem> parse_term(const Ring& r, Scanner& sc) {
    Monomial m = Monomial::one(r.nvars);
    FieldElem c(1);
    bool first = true;
    for (;;) {
        char ch = sc.peek();
        if (std::isdigit((unsigned char)ch)) {
            long num = sc.integer();
            Rational q(num);
            if (sc.accept('/')) q /= sc.integer();
            c = fmul(c, FieldElem(q), r.field);
        } else if (std::isalpha((unsigned char)ch)) {
            std::string w = sc.word();
            if (w == "sqrt") {
                sc.expect('(');
                long d = sc.integer();
                sc.expect(')');
                if (r.field.radicand != d)
                    sc.fail("sqrt(" + std::to_string(d) + ") outside the coefficient field");
                c = fmul(c, FieldElem(Rational(0), Rational(1)), r.field);
            } else {
                int v = var_index(r, w, sc);
                int p = 1;
                if (sc.accept('^')) p = (int)sc.integer();
                if (p < 0) sc.fail("negative exponent");
                m.e[v] += p;
            }
        } else if (first) {
            sc.fail("expected term");
        } else {
            sc.fail("expected factor");
        }
        first = false;
        if (!sc.accept('*')) break;
    }
    return {m, c};
}

} // namespace

Polynomial parse_polynomial(const Ring& r, const std::string& text) {
    Scanner sc(text);
    Polynomial p(r);
    bool neg = false;
    if (sc.accept('-')) neg = true;
    else sc.accept('+');
    for (;;) {
        auto [m, c] = parse_term(r, sc);
        p.add_term(m, neg ? fneg(c) : c);
        if (sc.eof()) break;
        if (sc.accept('-')) neg = true;
        else if (sc.accept('+')) neg = false;
        else sc.fail("expected '+' or '-'");
    }
    return p;
}

Monomial parse_monomial(const Ring& r, const std::string& text) {
    Scanner sc(text);
    auto [m, c] = parse_term(r, sc);
    if (!sc.eof()) sc.fail("trailing input after monomial");
    if (!(c == FieldElem(1))) sc.fail("monomial with nontrivial coefficient");
    return m;
}

MonomialIdeal parse_monomial_ideal(const Ring& r, const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '(' && t.back() == ')')
        t = t.substr(1, t.size() - 2);
    std::vector<Monomial> gens;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t comma = t.find(',', pos);
        std::string piece = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) gens.push_back(parse_monomial(r, piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return MonomialIdeal::make(r.nvars, std::move(gens));
}

TermOrder parse_term_order(int nvars, const std::string& text) {
    Scanner sc(text);
    std::string w = sc.word();
    auto int_list = [&](size_t expected) {
        sc.expect('(');
        std::vector<long long> v;
        for (;;) {
            v.push_back(sc.integer());
            if (!sc.accept(',')) break;
        }
        sc.expect(')');
        if (expected && v.size() != expected)
            sc.fail("expected " + std::to_string(expected) + " integers");
        return v;
    };
    if (w == "lex") return TermOrder::lex(nvars);
    if (w == "drl" || w == "degrevlex") return TermOrder::degrevlex(nvars);
    if (w == "grlex") return TermOrder::grlex(nvars);
    if (w == "bracket") return TermOrder::bracket(int_list(4));
    if (w == "M") return TermOrder::m_order(int_list(8));
    if (w == "matrix") {
        sc.expect('(');
        sc.expect('[');
        std::vector<std::vector<long long>> rows;
        for (;;) {
            sc.expect('[');
            std::vector<long long> row;
            for (;;) {
                row.push_back(sc.integer());
                if (!sc.accept(',')) break;
            }
            sc.expect(']');
            rows.push_back(std::move(row));
            if (!sc.accept(',')) break;
        }
        sc.expect(']');
        sc.expect(')');
        return TermOrder(nvars, std::move(rows));
    }
    sc.fail("unknown term order '" + w + "'");
}

HilbertPolynomial parse_hilbert_polynomial(const std::string& text) {
    Scanner sc(text);
    if (sc.peek() == '[') {
        sc.expect('[');
        std::vector<Rational> c;
        for (;;) {
            long num = sc.integer();
            Rational q(num);
            if (sc.accept('/')) q /= sc.integer();
            c.emplace_back(q);
            if (!sc.accept(',')) break;
        }
        sc.expect(']');
        if (!sc.eof()) sc.fail("trailing input");
        return HilbertPolynomial(std::move(c));
    }
    long d = 0, cst = 0;
    bool neg = sc.accept('-');
    if (sc.peek() == 't') {
        sc.expect('t');
        d = neg ? -1 : 1;
    } else {
        long v = sc.integer();
        if (sc.peek() == 't') {
            sc.expect('t');
            d = neg ? -v : v;
        } else {
            cst = neg ? -v : v;
        }
    }
    if (d != 0 && !sc.eof()) {
        bool neg2 = sc.accept('-');
        if (!neg2) sc.expect('+');
        long v = sc.integer();
        cst = neg2 ? -v : v;
    }
    if (!sc.eof()) sc.fail("trailing input");
    return HilbertPolynomial::linear(d, cst);
}

} // namespace boreldegen
