#pragma once
#include "acm.hpp"
#include "groebner.hpp"
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace boreldegen {

// Determinantal family on the quadric: minors x^2, x y^l and
// G_0 = sum_k t_k x y^(l-1-k) z^(m+k-p_(q-1-k)) w^(p_(q-1-k)) + s y^(l+m),
// together with the derived G_1..G_(q-1).
struct FamilySpec {
    int l = 0, m = 0, q = 0;
    std::vector<int> p_exps; // (p_0 ... p_(q-1))
};

// Generators over k[x,y,z,w,s,t_0..t_(q-1)]; the parameter ring is
// reported through out_ring when non-null.
std::vector<Polynomial> family_generators(const FamilySpec& spec, Ring* out_ring = nullptr);

// Monomial in the parameters: index 0 is the s-exponent, 1+k the
// t_k-exponent.
using ParamMonomial = std::vector<int>;

struct WeightAssignment {
    long w_s = 0;
    std::vector<long> w_t;
    long bayer_bound = 0;
};

// Integer weights realizing every requested strict inequality
// (greater, smaller) as a scalar-product inequality; with s_minimal,
// additionally every degree-<=N parameter monomial containing s is
// smaller than every one without s.  Throws on an inconsistent preorder.
WeightAssignment solve_weights(const std::vector<std::pair<ParamMonomial, ParamMonomial>>& ineqs,
                               bool s_minimal, long N, int nt);

// Substitute s -> u^(-w_s), t_k -> u^(-w_k), clear u-denominators, and
// take the flat limit at u = 0.  Throws "weights not generic" when the
// limit fails to be monomial.
MonomialIdeal specialize_and_limit(const FamilySpec& spec, const WeightAssignment& w);

enum class PostProcess { saturate, z_then_saturate };

struct PredictionCase {
    std::string id;
    FamilySpec family;
    std::vector<std::pair<ParamMonomial, ParamMonomial>> inequalities;
    bool s_minimal = false;
    PostProcess postprocess = PostProcess::saturate;
    QuadricCandidateSpec predicted;
};

// Known limit-ideal predictions.  Case ids:
//   EqProq2.1 EqProq2.2                  (q = 2; params l, m, i)
//   CorBLL.a CorBLL.b PDpos.a/b/c PDneg.a/b/c ileqj.a/a2/b Aen.a/b/c
//   P2A P2B P1                           (q = 3; params l, m, i, j)
//   Part                                 (q = l; params l, m, p_vec)
// Throws when the case's arithmetic hypotheses fail.
PredictionCase prediction_catalogue(const std::string& case_id, int l, int m, int i = 0,
                                    int j = 0, const std::vector<int>& p_vec = {});

std::vector<std::string> prediction_case_ids();

struct VerifyResult {
    bool confirmed = false;
    MonomialIdeal actual;    // saturation of the (possibly z-transformed) limit
    MonomialIdeal predicted; // candidate_ideal of the predicted spec
    WeightAssignment weights;
    std::string details;
};

VerifyResult verify_prediction(const PredictionCase& c, uint64_t seed = 1);

} // namespace boreldegen
