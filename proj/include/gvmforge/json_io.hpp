#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "gvmforge/analysis.hpp"
#include "gvmforge/freemod.hpp"
#include "gvmforge/gvm.hpp"

namespace gvmforge {

using json = nlohmann::json;

// ModuleParams <-> {n, S:[...], a:[...]|"symbolic", b, lambda}
// Rationals are carried as exact strings; a plain symbol serializes as
// "symbolic", a pinned-down lambda as its polynomial text.

inline json to_json(const ModuleParams& p) {
    json j;
    j["n"] = p.n();
    j["S"] = std::vector<int>(p.S().begin(), p.S().end());
    if (p.a_concrete()) {
        std::vector<std::string> a;
        for (const Rational& v : *p.a_values()) a.push_back(v.str());
        j["a"] = a;
    } else {
        j["a"] = "symbolic";
    }
    j["b"] = p.b() == Poly::b_sym() ? "symbolic" : p.b().str();
    j["lambda"] = p.lambda() == Poly::lam_sym() ? "symbolic" : p.lambda().str();
    return j;
}

inline ModuleParams params_from_json(const json& j) {
    std::set<int> S;
    for (int s : j.at("S")) S.insert(s);
    ModuleParams p(j.at("n").get<int>(), S);
    if (j.at("a").is_array()) {
        std::vector<Rational> a;
        for (const auto& v : j.at("a")) a.push_back(Rational::parse(v.get<std::string>()));
        p = p.with_a(a);
    }
    if (j.at("b").get<std::string>() != "symbolic") p = p.with_b_poly(Poly::parse(j.at("b").get<std::string>()));
    if (j.at("lambda").get<std::string>() != "symbolic")
        p = p.with_lambda_poly(Poly::parse(j.at("lambda").get<std::string>()));
    return p;
}

// GVMElement <-> {terms:[{m:[...], p:"<poly text>"}]}

inline json to_json(const GVMElement& v) {
    json terms = json::array();
    for (const auto& [m, p] : v.terms()) {
        json t;
        t["m"] = m;
        t["p"] = p.str();
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

inline GVMElement gvm_from_json(const json& j, const ModuleParams& params) {
    GVMElement v(params);
    for (const auto& t : j.at("terms")) {
        ExpVec m;
        for (int e : t.at("m")) m.push_back(e);
        v.add_term(m, Poly::parse(t.at("p").get<std::string>()));
    }
    return v;
}

// SimplicityReport <-> {params, verdict, conditions:{i,ii,iii},
//                       witness:{series,N,vector}|null,
//                       oracle:{N_max,h_deg_max,found:[...]}|null}

inline json to_json(const SimplicityReport& r) {
    json j;
    j["params"] = to_json(r.params);
    j["verdict"] = verdict_name(r.verdict);
    j["conditions"] = json{{"i", r.cond_i}, {"ii", r.cond_ii}, {"iii", r.cond_iii}};
    if (r.witness) {
        j["witness"] = json{{"series", series_name(r.witness->series)},
                            {"N", r.witness->N},
                            {"vector", to_json(r.witness->vector)}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.oracle) {
        json found = json::array();
        for (const auto& [N, v] : r.oracle->found) found.push_back(json{{"N", N}, {"vector", to_json(v)}});
        j["oracle"] = json{{"N_max", r.oracle->N_max}, {"h_deg_max", r.oracle->h_deg_max}, {"found", found}};
    } else {
        j["oracle"] = nullptr;
    }
    return j;
}

inline SimplicityReport report_from_json(const json& j) {
    ModuleParams params = params_from_json(j.at("params"));
    SimplicityReport r{params, Verdict::Simple, true, true, true, std::nullopt, std::nullopt};
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "simple") {
        r.verdict = Verdict::Simple;
    } else if (verdict == "reducible") {
        r.verdict = Verdict::Reducible;
    } else if (verdict == "inducing-module-not-simple") {
        r.verdict = Verdict::InducingNotSimple;
    } else {
        throw std::invalid_argument("SimplicityReport: unknown verdict '" + verdict + "'");
    }
    r.cond_i = j.at("conditions").at("i").get<bool>();
    r.cond_ii = j.at("conditions").at("ii").get<bool>();
    r.cond_iii = j.at("conditions").at("iii").get<bool>();
    if (!j.at("witness").is_null()) {
        const auto& w = j.at("witness");
        Series series = w.at("series").get<std::string>() == "v1" ? Series::v1 : Series::v2;
        int N = w.at("N").get<int>();
        ModuleParams constrained = constrain_params(series, N, params);
        r.witness = Witness{series, N, gvm_from_json(w.at("vector"), constrained)};
    }
    if (!j.at("oracle").is_null()) {
        const auto& o = j.at("oracle");
        OracleRun run;
        run.N_max = o.at("N_max").get<int>();
        run.h_deg_max = o.at("h_deg_max").get<int>();
        for (const auto& f : o.at("found"))
            run.found.emplace_back(f.at("N").get<int>(), gvm_from_json(f.at("vector"), params));
        r.oracle = std::move(run);
    }
    return r;
}

}  // namespace gvmforge
