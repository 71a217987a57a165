#pragma once
#include "borel_enum.hpp"
#include "monomial_ideal.hpp"
#include <vector>

namespace boreldegen {

// J(a,b) = (x^a, x^(a-1) y^(b1), ..., y^(ba)) with 0 = b0 < b1 < ... < ba.
struct AcmBorelSpec {
    int a = 0;
    std::vector<int> b;
};

MonomialIdeal j_ab(const AcmBorelSpec& spec, int nvars);

// J(l,m) = (x^2, x y^l, y^(l+m)).
MonomialIdeal quadric_acm_ideal(int l, int m);

// Generator shape for quadric-containing candidates:
//   x^2;
//   x y^(l-p) z^(a0), ..., x y^(l-1) z^(a_{p-1}), x y^l;
//   y^(l+m+p) z^(b_p), ..., y^(2l+m-1) z^(b_{l-1}), y^(2l+m).
// `a` has p entries, `b` has l-p entries (indices p..l-1).
struct QuadricCandidateSpec {
    int l = 0, m = 0, p = 0;
    std::vector<int> a;
    std::vector<int> b;
    bool strict = false; // strict: a, b strictly decreasing until 0

    bool valid() const;
};

MonomialIdeal candidate_ideal(const QuadricCandidateSpec& spec);

// True iff sum(a) + sum(b) = sum_{i=0}^{p-1} (m + 2i); then the candidate
// has the same quotient Hilbert polynomial as J(l,m).
bool hp_sum_condition(const QuadricCandidateSpec& spec);

// For every s = 0..a with d_s = sum_{i<=s} b_i, x^(a-s) y^(d_s) must lie
// in J (necessary for J to be a degeneration of the generic J(a,b) curve).
bool necessary_condition_c1(const MonomialIdeal& J, const AcmBorelSpec& spec);

// hf_ideal(J, d) >= hf_ideal(ref, d) for all d up to the Gotzmann number
// of the shared quotient Hilbert polynomial.  Throws on HP mismatch.
bool condition_c2(const MonomialIdeal& J, const MonomialIdeal& ref);

struct FilterResult {
    BorelCatalog catalog;
    std::vector<MonomialIdeal> passing;
    std::vector<MonomialIdeal> failing_c1;
    std::vector<MonomialIdeal> failing_c2;
};

FilterResult filter_candidates(int l, int m);

// Predicted component members, p = 1: a = (m-i), b = (i, 0, ..., 0).
QuadricCandidateSpec predicted_p1(int l, int m, int i);

// p = 2: a = (a0, a1), b = (b2, 0, ...); requires a0+a1+b2 = 2m+2.
// hypothesis_ok: a0 >= m+2, or a0 <= m+2 and a0-a1 even.
std::pair<QuadricCandidateSpec, bool> predicted_p2(int l, int m, int a0, int a1, int b2);

// p = 3: a = (a0,a1,a2), b = 0; requires a0+a1+a2 = 3m+6.
// Returns the matching case 1/2/3, or 0 (none).
std::pair<QuadricCandidateSpec, int> predicted_p3(int l, int m, int a0, int a1, int a2);

// p = l, b = (); a_i = m + 2(l-1-i) + (l-1-i) p_{i+1} - (l-i) p_i + p_0,
// with p_l = 0.  Requires p_0 <= p_1+1 <= ... <= p_{l-1}+l-1.
// hypothesis_ok: for each r = 1..l-1, r * p_{l-r} >= max over partitions
// lambda of r(l-r) into r parts of size <= l-1 of sum p_{lambda_i}.
std::pair<QuadricCandidateSpec, bool> predicted_part(int l, int m, const std::vector<int>& p_vec);

// All weakly decreasing length-`parts` sequences with entries in
// [0, max_part] summing to `total`.
std::vector<std::vector<int>> partitions(int total, int parts, int max_part);

} // namespace boreldegen
