#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "symfock/fock.hpp"
#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"
#include "symfock/verify.hpp"

namespace symfock {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson partition_to_json(const Partition& lambda) {
    return OrderedJson(lambda.parts());
}

/// {"basis": "...", "terms": [{"partition": [...], "num": "...", "den": "..."}]}
/// with decimal-string coefficients so nothing is rounded.
inline OrderedJson symelt_to_json(const SymElt& x) {
    OrderedJson j;
    switch (x.basis()) {
        case BasisTag::schur: j["basis"] = "schur"; break;
        case BasisTag::elementary: j["basis"] = "elementary"; break;
        case BasisTag::complete: j["basis"] = "complete"; break;
        case BasisTag::power: j["basis"] = "power"; break;
    }
    j["terms"] = OrderedJson::array();
    for (auto& [lambda, c] : x.terms()) {
        OrderedJson t;
        t["partition"] = partition_to_json(lambda);
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline BasisTag basis_from_name(const std::string& name) {
    if (name == "schur" || name == "s") return BasisTag::schur;
    if (name == "elementary" || name == "e") return BasisTag::elementary;
    if (name == "complete" || name == "h") return BasisTag::complete;
    if (name == "power" || name == "p") return BasisTag::power;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

inline SymElt symelt_from_json(const OrderedJson& j) {
    SymElt x(basis_from_name(j.at("basis").get<std::string>()));
    for (auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        Rational c(Integer(t.at("num").get<std::string>()),
                   Integer(t.at("den").get<std::string>()));
        x.add_term(Partition(std::move(parts)), std::move(c));
    }
    return x;
}

inline OrderedJson weight_label_to_json(const WeightLabel& w) {
    OrderedJson j;
    j["p"] = w.p;
    j["counts"] = OrderedJson::object();
    for (auto& [res, n] : w.counts) j["counts"][std::to_string(res)] = n;
    return j;
}

/// {"p": int, "degrees": [{"n": int, "dimension": int, "basis": [SymElt...]}]}
inline OrderedJson span_to_json(int p, const std::vector<std::vector<FockElt>>& graded) {
    OrderedJson j;
    j["p"] = p;
    j["degrees"] = OrderedJson::array();
    for (std::size_t n = 0; n < graded.size(); ++n) {
        OrderedJson d;
        d["n"] = n;
        d["dimension"] = graded[n].size();
        d["basis"] = OrderedJson::array();
        for (auto& v : graded[n]) d["basis"].push_back(symelt_to_json(v));
        j["degrees"].push_back(std::move(d));
    }
    return j;
}

inline OrderedJson suite_config_to_json(const SuiteConfig& cfg) {
    OrderedJson j;
    j["suite"] = cfg.suite;
    j["p_values"] = cfg.p_values;
    j["max_degree"] = cfg.max_degree;
    j["generator_bounds"] = OrderedJson::object();
    for (auto& [k, v] : cfg.generator_bounds) j["generator_bounds"][k] = v;
    j["seed"] = cfg.seed;
    j["negative_control"] = cfg.negative_control;
    return j;
}

/// Stable report form: no timing, failures already canonically sorted, so
/// identical config + seed reproduces identical bytes.
inline OrderedJson report_to_json(const VerificationReport& rep) {
    OrderedJson j;
    j["suite"] = rep.suite;
    j["config"] = suite_config_to_json(rep.config);
    j["cases"] = rep.cases_run;
    j["failures"] = OrderedJson::array();
    for (auto& f : rep.failures) {
        OrderedJson fj;
        fj["input"] = f.input;
        fj["expected"] = symelt_to_json(f.expected);
        fj["got"] = symelt_to_json(f.got);
        j["failures"].push_back(std::move(fj));
    }
    j["pass"] = rep.pass();
    return j;
}

inline OrderedJson core_to_json(int p, const Partition& core, const std::vector<Partition>& quotient) {
    OrderedJson j;
    j["p"] = p;
    j["core"] = partition_to_json(core);
    j["quotient"] = OrderedJson::array();
    for (auto& q : quotient) j["quotient"].push_back(partition_to_json(q));
    return j;
}

} // namespace symfock
