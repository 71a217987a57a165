#include "boreldegen/lp.hpp"
#include <algorithm>
#include <set>
#include <stdexcept>

namespace boreldegen {

namespace {

// One inequality a.x >= c.
struct Row {
    std::vector<Rational> a;
    Rational c;
};

// Scale rows, drop vacuous ones, deduplicate.  Sets infeasible when a row
// reads 0 >= c with c > 0.
bool normalize(std::vector<Row>& rows) {
    std::set<std::vector<Rational>> seen;
    std::vector<Row> out;
    for (Row& r : rows) {
        Rational scale = 0;
        for (const Rational& v : r.a)
            if (v != 0) { scale = abs(v); break; }
        if (scale == 0) {
            if (r.c > 0) return false;
            continue;
        }
        for (Rational& v : r.a) v /= scale;
        r.c /= scale;
        std::vector<Rational> key = r.a;
        key.push_back(r.c);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
    }
    rows = std::move(out);
    return true;
}

} // namespace

std::optional<std::vector<long>> strict_feasible(const SeparationProblem& prob) {
    size_t n = 0;
    for (const auto& r : prob.rows) n = std::max(n, r.size());
    std::vector<Row> rows;
    for (const auto& r : prob.rows) {
        Row row;
        row.a.assign(n, Rational(0));
        for (size_t i = 0; i < r.size(); ++i) row.a[i] = Rational(r[i]);
        row.c = 1;
        rows.push_back(std::move(row));
    }

    // Eliminate variables n-1, n-2, ..., 0, remembering the system that was
    // current just before each elimination for back-substitution.
    std::vector<std::vector<Row>> stage(n);
    for (size_t j = n; j-- > 0;) {
        if (!normalize(rows)) return std::nullopt;
        stage[j] = rows;
        std::vector<Row> pos, neg, rest;
        for (Row& r : rows) {
            if (r.a[j] > 0)
                pos.push_back(std::move(r));
            else if (r.a[j] < 0)
                neg.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const Row& p : pos)
            for (const Row& q : neg) {
                Row r;
                r.a.assign(n, Rational(0));
                // p.a[j] * q - q.a[j] * p keeps both senses, kills x_j
                for (size_t i = 0; i < n; ++i) r.a[i] = p.a[j] * q.a[i] - q.a[j] * p.a[i];
                r.c = p.a[j] * q.c - q.a[j] * p.c;
                rest.push_back(std::move(r));
            }
        rows = std::move(rest);
    }
    if (!normalize(rows)) return std::nullopt;

    // Back-substitute: stage[j] involves only x_0..x_j, so x_j sits in an
    // interval once x_0..x_{j-1} are fixed.
    std::vector<Rational> x(n, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const Row& r : stage[j]) {
            if (r.a[j] == 0) continue;
            Rational rest = r.c;
            for (size_t i = 0; i < j; ++i) rest -= r.a[i] * x[i];
            Rational bound = rest / r.a[j];
            if (r.a[j] > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo && has_hi && lo > hi) throw std::logic_error("strict_feasible: bad interval");
        if (has_lo && has_hi)
            x[j] = (lo + hi) / 2;
        else if (has_lo)
            x[j] = lo;
        else if (has_hi)
            x[j] = hi;
    }

    // Scale to integers and re-verify every original inequality.
    mpz_class den = 1;
    for (const Rational& v : x) den = lcm(den, v.get_den());
    std::vector<long> out(n);
    for (size_t j = 0; j < n; ++j) {
        mpz_class v = x[j].get_num() * (den / x[j].get_den());
        if (!v.fits_slong_p()) throw std::overflow_error("strict_feasible: weight overflow");
        out[j] = v.get_si();
    }
    for (const auto& r : prob.rows) {
        mpz_class dot = 0;
        for (size_t i = 0; i < r.size(); ++i) dot += mpz_class(r[i]) * out[i];
        if (dot < den) throw std::logic_error("strict_feasible: verification failed");
    }
    return out;
}

} // namespace boreldegen
