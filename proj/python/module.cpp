// String-based bindings for the main library operations.
#include "boreldegen/acm.hpp"
#include "boreldegen/borel_enum.hpp"
#include "boreldegen/degeneration.hpp"
#include "boreldegen/groebner.hpp"
#include "boreldegen/parse.hpp"
#include "boreldegen/segment.hpp"
#include "boreldegen/witness.hpp"
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <sstream>

namespace py = pybind11;
using namespace boreldegen;

namespace {

Ring make_ring(long radicand) {
    return radicand ? Ring::quadratic(4, radicand) : Ring::rationals(4);
}

PolynomialIdeal parse_ideal(const Ring& r, const std::string& text) {
    PolynomialIdeal I{r, {}};
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ';'))
        if (piece.find_first_not_of(" \t") != std::string::npos)
            I.gens.push_back(parse_polynomial(r, piece));
    return I;
}

std::string hp_string(const HilbertPolynomial& p) {
    std::ostringstream os;
    if (p.coeffs.size() > 1) os << p.coeffs[1] << "t";
    if (p.coeffs.empty()) os << "0";
    else if (p.coeffs.size() == 1) os << p.coeffs[0];
    else if (!(p.coeffs[0] == 0)) os << (p.coeffs[0] < 0 ? "" : "+") << p.coeffs[0];
    return os.str();
}

std::vector<std::string> ideal_strings(const std::vector<MonomialIdeal>& v) {
    std::vector<std::string> out;
    for (auto& I : v) out.push_back(I.to_string());
    return out;
}

} // namespace

PYBIND11_MODULE(_boreldegen, m) {
    m.doc() = "saturated Borel ideals in P^3: enumeration, filters, limits";

    m.def(
        "enumerate_ideals",
        [](const std::string& hp) {
            auto cat = enumerate_saturated_borel(parse_hilbert_polynomial(hp), 4);
            return ideal_strings(cat.entries);
        },
        py::arg("hp"), "All saturated Borel-fixed ideals with the given quotient "
                       "Hilbert polynomial, e.g. '5t-2'.");

    m.def(
        "filter_candidates",
        [](int l, int m) {
            auto fr = filter_candidates(l, m);
            py::dict d;
            d["passing"] = ideal_strings(fr.passing);
            d["failing_c1"] = ideal_strings(fr.failing_c1);
            d["failing_c2"] = ideal_strings(fr.failing_c2);
            return d;
        },
        py::arg("l"), py::arg("m"));

    m.def(
        "groebner_basis",
        [](const std::string& gens, const std::string& order, long sqrt) {
            Ring r = make_ring(sqrt);
            auto gb = buchberger(parse_ideal(r, gens), parse_term_order(4, order));
            std::vector<std::string> out;
            for (auto& g : gb) out.push_back(g.to_string());
            return out;
        },
        py::arg("gens"), py::arg("order") = "drl", py::arg("sqrt") = 0,
        "Reduced basis of the ideal given by ';'-separated generators in x,y,z,w.");

    m.def(
        "initial_ideal",
        [](const std::string& gens, const std::string& order, bool saturate, long sqrt) {
            Ring r = make_ring(sqrt);
            MonomialIdeal J = initial_ideal(parse_ideal(r, gens), parse_term_order(4, order));
            if (saturate) J = saturation(J);
            return J.to_string();
        },
        py::arg("gens"), py::arg("order") = "drl", py::arg("saturate") = false,
        py::arg("sqrt") = 0);

    m.def(
        "saturation",
        [](const std::string& ideal) {
            return saturation(parse_monomial_ideal(Ring::rationals(4), ideal)).to_string();
        },
        py::arg("ideal"));

    m.def(
        "hilbert_polynomial",
        [](const std::string& ideal) {
            return hp_string(
                hilbert_polynomial_quotient(parse_monomial_ideal(Ring::rationals(4), ideal)));
        },
        py::arg("ideal"), "Quotient Hilbert polynomial of a saturated monomial ideal.");

    m.def(
        "verify_witness",
        [](int l, int m, const std::string& F, const std::string& order,
           const std::string& target, long sqrt) {
            Ring r = make_ring(sqrt);
            auto res = verify_witness(l, m, parse_polynomial(r, F), parse_term_order(4, order),
                                      parse_monomial_ideal(Ring::rationals(4), target));
            py::dict d;
            d["verified"] = res.verified;
            d["initial"] = res.initial.to_string();
            d["saturated"] = res.saturated.to_string();
            return d;
        },
        py::arg("l"), py::arg("m"), py::arg("F"), py::arg("order"), py::arg("target"),
        py::arg("sqrt") = 0,
        "Check that in((x^2, x y^l, x F + y^(l+m))) saturates to the target ideal.");

    m.def(
        "is_segment",
        [](const std::string& ideal, int degree) -> py::object {
            auto J = parse_monomial_ideal(Ring::rationals(4), ideal);
            auto s = is_segment(J, degree);
            if (!s) return py::none();
            return py::cast(s->weights);
        },
        py::arg("ideal"), py::arg("degree"),
        "Weight vector realizing the degree-d piece as a segment, or None.");

    m.def(
        "classify_segment",
        [](const std::string& ideal) {
            auto c = classify_segment(parse_monomial_ideal(Ring::rationals(4), ideal));
            switch (c.kind) {
                case SegmentKind::hilbert: return std::string("hilbert");
                case SegmentKind::reg: return std::string("reg");
                case SegmentKind::at: return "at:" + std::to_string(c.t);
                default: return std::string("none");
            }
        },
        py::arg("ideal"));

    m.def(
        "verify_prediction",
        [](const std::string& case_id, int l, int m, int i, int j, std::vector<int> p_vec,
           uint64_t seed) {
            auto c = prediction_catalogue(case_id, l, m, i, j, p_vec);
            auto r = verify_prediction(c, seed);
            py::dict d;
            d["confirmed"] = r.confirmed;
            d["actual"] = r.actual.to_string();
            d["predicted"] = r.predicted.to_string();
            d["details"] = r.details;
            return d;
        },
        py::arg("case_id"), py::arg("l"), py::arg("m"), py::arg("i") = 0, py::arg("j") = 0,
        py::arg("p_vec") = std::vector<int>{}, py::arg("seed") = 1,
        "Realize a catalogued degeneration and compare with its predicted limit.");

    m.def("prediction_case_ids", [] { return prediction_case_ids(); });
}
