#pragma once
#include "monomial.hpp"
#include <compare>
#include <string>
#include <vector>

namespace boreldegen {

// A term order given by an integer matrix: m1 > m2 iff M*e(m1) > M*e(m2)
// lexicographically.  Validity (checked at construction): the rows span
// rank nvars, and the first nonzero entry of every column is positive,
// which makes the order global (1 is smallest).
class TermOrder {
public:
    TermOrder(int nvars, std::vector<std::vector<long long>> rows);

    int nvars() const { return nvars_; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    // <0, 0, >0 like strcmp; 0 only for equal monomials.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    static TermOrder lex(int nvars);
    static TermOrder grlex(int nvars);
    static TermOrder degrevlex(int nvars);
    // rows [1,1,1,1], v, [0,0,-1,0], [0,-1,0,0]; nvars must be 4.
    static TermOrder bracket(const std::vector<long long>& v);
    // rows [1,1,1,1], v[0..3], v[4..7], [0,0,1,0]; nvars must be 4.
    static TermOrder m_order(const std::vector<long long>& v);

    // Order on a ring with `block` extra leading variables at the front,
    // eliminating them: rows are unit vectors on the new variables, then
    // the rows of `inner` padded with zeros.
    static TermOrder eliminate_front(int block, const TermOrder& inner);

    std::string to_string() const;

private:
    int nvars_;
    std::vector<std::vector<long long>> rows_;
};

} // namespace boreldegen
