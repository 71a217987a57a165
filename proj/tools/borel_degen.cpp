#include <CLI11.hpp>
#include <json.hpp>

#include "boreldegen/acm.hpp"
#include "boreldegen/degeneration.hpp"
#include "boreldegen/parse.hpp"
#include "boreldegen/reproduce.hpp"
#include "boreldegen/segment.hpp"
#include "boreldegen/witness.hpp"

#include <iostream>
#include <sstream>

using namespace boreldegen;
using nlohmann::json;

namespace {

Ring ring_for(long radicand) {
    return radicand ? Ring::quadratic(4, radicand) : Ring::rationals(4);
}

std::vector<Polynomial> parse_gens(const Ring& r, const std::string& text) {
    std::vector<Polynomial> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ';'))
        if (piece.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_polynomial(r, piece));
    if (out.empty()) throw std::invalid_argument("no generators given");
    return out;
}

json ideal_json(const MonomialIdeal& I, const Ring& r) {
    json gens = json::array();
    for (auto& m : I.gens) gens.push_back(monomial_to_string(m, r));
    return gens;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_enumerate(const std::string& hp, bool count_only, bool as_json) {
    auto cat = enumerate_saturated_borel(parse_hilbert_polynomial(hp), 4);
    Ring r = Ring::rationals(4);
    json j{{"hp", hp}, {"total", cat.entries.size()}};
    std::ostringstream out;
    if (!count_only) {
        json list = json::array();
        int label = 1;
        for (auto& I : cat.entries) {
            list.push_back(ideal_json(I, r));
            out << label++ << ": " << I.to_string(r) << "\n";
        }
        j["ideals"] = list;
    }
    out << "TOTAL " << cat.entries.size() << "\n";
    emit(as_json, j, out.str());
    return 0;
}

int cmd_filter(int l, int m, bool as_json) {
    auto fr = filter_candidates(l, m);
    Ring r = Ring::rationals(4);
    std::ostringstream out;
    json j{{"l", l}, {"m", m}};
    auto section = [&](const char* name, const std::vector<MonomialIdeal>& v) {
        out << name << " (" << v.size() << "):\n";
        json list = json::array();
        for (auto& I : v) {
            out << "  " << I.to_string(r) << "\n";
            list.push_back(ideal_json(I, r));
        }
        j[name] = list;
    };
    section("PASS", fr.passing);
    section("FAIL-C1", fr.failing_c1);
    section("FAIL-C2", fr.failing_c2);
    emit(as_json, j, out.str());
    return 0;
}

int cmd_gb(const std::string& ideal, const std::string& order, long radicand, bool as_json) {
    Ring r = ring_for(radicand);
    auto o = parse_term_order(4, order);
    auto G = buchberger(PolynomialIdeal{r, parse_gens(r, ideal)}, o);
    json list = json::array();
    std::ostringstream out;
    for (auto& g : G) {
        list.push_back(g.to_string());
        out << g.to_string() << "\n";
    }
    emit(as_json, json{{"basis", list}}, out.str());
    return 0;
}

int cmd_initial(const std::string& ideal, const std::string& order, long radicand, bool saturate,
                bool as_json) {
    Ring r = ring_for(radicand);
    auto in = initial_ideal(PolynomialIdeal{r, parse_gens(r, ideal)}, parse_term_order(4, order));
    json j{{"initial", ideal_json(in, r)}};
    std::ostringstream out;
    out << "INITIAL " << in.to_string(r) << "\n";
    if (saturate) {
        auto s = saturation(in);
        j["saturation"] = ideal_json(s, r);
        out << "SATURATION " << s.to_string(r) << "\n";
    }
    emit(as_json, j, out.str());
    return 0;
}

int cmd_limit(const std::string& case_id, int l, int m, int i, int jj,
              const std::vector<int>& pvec, uint64_t seed, bool as_json) {
    auto c = prediction_catalogue(case_id, l, m, i, jj, pvec);
    auto res = verify_prediction(c, seed ? seed : 1);
    Ring r = Ring::rationals(4);
    json j{{"case", case_id},
           {"weights", json{{"s", res.weights.w_s}, {"t", res.weights.w_t}}},
           {"predicted", ideal_json(res.predicted, r)},
           {"limit_saturation", ideal_json(res.actual, r)},
           {"confirmed", res.confirmed}};
    std::ostringstream out;
    out << "WEIGHTS s=" << res.weights.w_s;
    for (size_t k = 0; k < res.weights.w_t.size(); ++k)
        out << " t" << k << "=" << res.weights.w_t[k];
    out << "\nPREDICTED " << res.predicted.to_string(r) << "\nLIMIT-SATURATION "
        << res.actual.to_string(r) << "\n"
        << (res.confirmed ? "CONFIRMED" : "MISMATCH") << "\n";
    emit(as_json, j, out.str());
    return res.confirmed ? 0 : 1;
}

int cmd_segment(const std::string& ideal, int degree, bool as_json) {
    Ring r = Ring::rationals(4);
    auto J = parse_monomial_ideal(r, ideal);
    auto seg = is_segment(J, degree);
    json j{{"degree", degree}};
    std::ostringstream out;
    if (seg) {
        j["segment"] = true;
        j["weights"] = seg->weights;
        out << "SEGMENT weights";
        for (long w : seg->weights) out << " " << w;
        out << "\n";
    } else {
        j["segment"] = false;
        out << "NOT-A-SEGMENT";
        if (auto cert = non_segment_certificate(J, degree)) {
            j["certificate"] = {monomial_to_string(cert->u, r), monomial_to_string(cert->m1, r),
                                monomial_to_string(cert->m2, r)};
            out << " certificate (" << monomial_to_string(cert->u, r) << ")^2 = ("
                << monomial_to_string(cert->m1, r) << ") * (" << monomial_to_string(cert->m2, r)
                << ")";
        }
        out << "\n";
    }
    emit(as_json, j, out.str());
    return 0;
}

int cmd_witness_verify(int l, int m, const std::string& F, const std::string& order,
                       const std::string& target, long radicand, bool as_json) {
    Ring r = ring_for(radicand);
    auto res = verify_witness(l, m, parse_polynomial(r, F), parse_term_order(4, order),
                              parse_monomial_ideal(r, target));
    json j{{"verified", res.verified},
           {"initial", ideal_json(res.initial, r)},
           {"saturation", ideal_json(res.saturated, r)}};
    std::ostringstream out;
    out << (res.verified ? "VERIFIED" : "FAILED") << "\nINITIAL " << res.initial.to_string(r)
        << "\nSATURATION " << res.saturated.to_string(r) << "\n";
    emit(as_json, j, out.str());
    return res.verified ? 0 : 1;
}

int cmd_witness_search(int l, int m, const std::string& order, const std::string& target,
                       uint64_t seed, int tries, bool as_json) {
    Ring r = Ring::rationals(4);
    auto F = heuristic_solve(l, m, parse_monomial_ideal(r, target), parse_term_order(4, order),
                             seed, tries);
    if (F) {
        emit(as_json, json{{"found", true}, {"F", F->to_string()}},
             "FOUND " + F->to_string() + "\n");
        return 0;
    }
    emit(as_json, json{{"found", false}}, "NOT-FOUND\n");
    return 1;
}

int cmd_reproduce(bool all, const std::string& section, uint64_t seed, bool as_json) {
    SuiteReport rep;
    if (all || section == "all" || section.empty())
        rep = reproduce_all(seed);
    else if (section == "counts")
        rep = reproduce_counts();
    else if (section == "1.3")
        rep = reproduce_filter_13();
    else if (section == "2.2")
        rep = reproduce_degenerations_22(seed);
    else if (section == "3.1" || section == "2.3")
        rep = reproduce_witnesses_31();
    else if (section == "3.3" || section == "2.5")
        rep = reproduce_suite_33();
    else if (section == "predictions")
        rep = reproduce_predictions(false, seed);
    else if (section == "predictions-smoke")
        rep = reproduce_predictions(true, seed);
    else if (section == "properties")
        rep = reproduce_properties(seed);
    else if (section == "discrepancy")
        rep = reproduce_discrepancy();
    else
        throw CLI::ValidationError("unknown section: " + section);
    int fails = 0;
    json items = json::array();
    std::ostringstream out;
    for (auto& it : rep.items) {
        const char* tag = it.pass ? "PASS" : (it.warn_only ? "WARNING" : "FAIL");
        if (!it.pass && !it.warn_only) ++fails;
        out << tag << " " << it.id;
        if (!it.detail.empty() && !it.pass) out << " [" << it.detail << "]";
        out << "\n";
        items.push_back({{"id", it.id}, {"pass", it.pass}, {"warn_only", it.warn_only},
                         {"detail", it.detail}});
    }
    out << "SUMMARY " << rep.items.size() << " checks, " << fails << " failures\n";
    emit(as_json, json{{"items", items}, {"failures", fails}}, out.str());
    return fails ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with Borel-fixed monomial ideals and curve degenerations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output")->configurable(false);

    std::string hp, ideal, order = "drl", target, F, section, case_id;
    bool count_only = false, saturate = false, all = false;
    int l = 1, m = 1, ii = 0, jj = 0, degree = 1, tries = 20;
    long radicand = 0;
    uint64_t seed = 0;
    std::vector<int> pvec;

    auto* en = app.add_subcommand("enumerate", "saturated Borel-fixed ideals by Hilbert polynomial");
    en->add_option("--hp", hp, "Hilbert polynomial, e.g. \"5t-2\"")->required();
    en->add_flag("--count-only", count_only);
    en->add_flag("--json", as_json);

    auto* fi = app.add_subcommand("filter", "necessary-condition filter for the quadric component");
    fi->add_option("--l", l)->required();
    fi->add_option("--m", m)->required();
    fi->add_flag("--json", as_json);

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("--ideal", ideal, "generators separated by ';'")->required();
    gb->add_option("--order", order, "lex | drl | grlex | bracket(..) | M(..) | matrix(..)");
    gb->add_option("--sqrt", radicand, "work over Q(sqrt d)");
    gb->add_flag("--json", as_json);

    auto* in = app.add_subcommand("initial", "initial ideal under a term order");
    in->add_option("--ideal", ideal)->required();
    in->add_option("--order", order);
    in->add_option("--sqrt", radicand);
    in->add_flag("--saturate", saturate);
    in->add_flag("--json", as_json);

    auto* li = app.add_subcommand("limit", "flat limit of a determinantal family");
    li->add_option("--case", case_id, "prediction case id")->required();
    li->add_option("--l", l)->required();
    li->add_option("--m", m)->required();
    li->add_option("--i", ii);
    li->add_option("--j", jj);
    li->add_option("--pvec", pvec, "staircase exponents for the Part case");
    li->add_option("--seed", seed);
    li->add_flag("--json", as_json);

    auto* se = app.add_subcommand("segment", "segment test at a degree");
    se->add_option("--ideal", ideal)->required();
    se->add_option("--degree", degree)->required();
    se->add_flag("--json", as_json);

    auto* wi = app.add_subcommand("witness", "curve-ideal witnesses");
    auto* wv = wi->add_subcommand("verify");
    wv->add_option("--l", l)->required();
    wv->add_option("--m", m)->required();
    wv->add_option("--F", F)->required();
    wv->add_option("--order", order);
    wv->add_option("--target", target)->required();
    wv->add_option("--sqrt", radicand);
    wv->add_flag("--json", as_json);
    auto* wsrch = wi->add_subcommand("search");
    wsrch->add_option("--l", l)->required();
    wsrch->add_option("--m", m)->required();
    wsrch->add_option("--order", order);
    wsrch->add_option("--target", target)->required();
    wsrch->add_option("--seed", seed);
    wsrch->add_option("--tries", tries);
    wsrch->add_flag("--json", as_json);
    wi->require_subcommand(1);

    auto* re = app.add_subcommand("reproduce", "re-run the published checks");
    re->add_flag("--all", all);
    re->add_option("--section", section,
                   "counts | 1.3 | 2.2 | 3.1 | 3.3 | predictions | predictions-smoke | "
                   "properties | discrepancy");
    re->add_option("--seed", seed);
    re->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (en->parsed()) return cmd_enumerate(hp, count_only, as_json);
        if (fi->parsed()) return cmd_filter(l, m, as_json);
        if (gb->parsed()) return cmd_gb(ideal, order, radicand, as_json);
        if (in->parsed()) return cmd_initial(ideal, order, radicand, saturate, as_json);
        if (li->parsed()) return cmd_limit(case_id, l, m, ii, jj, pvec, seed, as_json);
        if (se->parsed()) return cmd_segment(ideal, degree, as_json);
        if (wi->parsed())
            return wv->parsed() ? cmd_witness_verify(l, m, F, order, target, radicand, as_json)
                                : cmd_witness_search(l, m, order, target, seed, tries, as_json);
        if (re->parsed()) return cmd_reproduce(all, section, seed, as_json);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
