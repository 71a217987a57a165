#include "boreldegen/term_order.hpp"
#include <gmpxx.h>
#include <sstream>
#include <stdexcept>

namespace boreldegen {

static int matrix_rank(const std::vector<std::vector<long long>>& rows, int ncols) {
    std::vector<std::vector<mpq_class>> m;
    for (auto& r : rows) {
        std::vector<mpq_class> q;
        for (long long x : r) q.emplace_back((long)x);
        m.push_back(std::move(q));
    }
    int rank = 0;
    for (int col = 0; col < ncols && rank < (int)m.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)m.size(); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < (int)m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

TermOrder::TermOrder(int nvars, std::vector<std::vector<long long>> rows)
    : nvars_(nvars), rows_(std::move(rows)) {
    if (nvars_ <= 0) throw std::invalid_argument("term order: nvars must be positive");
    for (auto& r : rows_)
        if ((int)r.size() != nvars_)
            throw std::invalid_argument("term order: row length mismatch");
    for (int c = 0; c < nvars_; ++c) {
        long long first = 0;
        for (auto& r : rows_)
            if (r[c] != 0) { first = r[c]; break; }
        if (first <= 0)
            throw std::invalid_argument("term order not global: column " + std::to_string(c));
    }
    if (matrix_rank(rows_, nvars_) != nvars_)
        throw std::invalid_argument("term order matrix rank deficient");
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (auto& r : rows_) {
        long long s = 0;
        for (int i = 0; i < nvars_; ++i) s += r[i] * (long long)(a.e[i] - b.e[i]);
        if (s > 0) return 1;
        if (s < 0) return -1;
    }
    return 0;
}

TermOrder TermOrder::lex(int n) {
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> r(n, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return TermOrder(n, rows);
}

TermOrder TermOrder::grlex(int n) {
    std::vector<std::vector<long long>> rows{std::vector<long long>(n, 1)};
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long long> r(n, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return TermOrder(n, rows);
}

TermOrder TermOrder::degrevlex(int n) {
    std::vector<std::vector<long long>> rows{std::vector<long long>(n, 1)};
    for (int i = n - 1; i >= 1; --i) {
        std::vector<long long> r(n, 0);
        r[i] = -1;
        rows.push_back(std::move(r));
    }
    return TermOrder(n, rows);
}

TermOrder TermOrder::bracket(const std::vector<long long>& v) {
    if (v.size() != 4) throw std::invalid_argument("bracket order needs 4 weights");
    return TermOrder(4, {{1, 1, 1, 1}, v, {0, 0, -1, 0}, {0, -1, 0, 0}});
}

TermOrder TermOrder::m_order(const std::vector<long long>& v) {
    if (v.size() != 8) throw std::invalid_argument("M order needs 8 weights");
    return TermOrder(4, {{1, 1, 1, 1},
                         {v[0], v[1], v[2], v[3]},
                         {v[4], v[5], v[6], v[7]},
                         {0, 0, 1, 0}});
}

TermOrder TermOrder::eliminate_front(int block, const TermOrder& inner) {
    int n = inner.nvars() + block;
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < block; ++i) {
        std::vector<long long> r(n, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    for (auto& ir : inner.rows()) {
        std::vector<long long> r(n, 0);
        for (int i = 0; i < inner.nvars(); ++i) r[block + i] = ir[i];
        rows.push_back(std::move(r));
    }
    return TermOrder(n, rows);
}

std::string TermOrder::to_string() const {
    std::ostringstream os;
    os << "matrix([";
    for (size_t i = 0; i < rows_.size(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < nvars_; ++j) os << (j ? "," : "") << rows_[i][j];
        os << "]";
    }
    os << "])";
    return os.str();
}

} // namespace boreldegen
