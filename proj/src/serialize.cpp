#include "pfaff/serialize.hpp"

#include <stdexcept>

namespace pfaff {

namespace {

Rat rat_from_strings(const std::string& num, const std::string& den) {
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("form_from_json: zero denominator");
    return Rat(n, d);
}

nlohmann::json term_json(const std::vector<int>& idx, const Monomial& mono, const Rat& c) {
    nlohmann::json t;
    t["idx"] = idx;
    t["exp"] = mono.exps;
    t["num"] = numerator_of(c).str();
    t["den"] = denominator_of(c).str();
    return t;
}

} // namespace

nlohmann::json form_to_json(const PolyForm& w) {
    nlohmann::json j;
    j["n"] = w.n();
    j["r"] = w.r();
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, c] : w.terms()) j["terms"].push_back(term_json(k.idx, k.mono, c));
    return j;
}

PolyForm form_from_json(const nlohmann::json& j) {
    PolyForm w(j.at("n").get<int>(), j.at("r").get<int>());
    for (const auto& t : j.at("terms")) {
        w.add_term(t.at("idx").get<std::vector<int>>(),
                   Monomial(t.at("exp").get<std::vector<int>>()),
                   rat_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
    }
    return w;
}

nlohmann::json field_to_json(const PolyVectorField& X) {
    nlohmann::json j;
    j["n"] = X.n();
    j["components"] = nlohmann::json::array();
    for (int i = 0; i <= X.n(); ++i) {
        nlohmann::json comp = nlohmann::json::array();
        for (const auto& [m, c] : X.component(i).terms()) {
            nlohmann::json t;
            t["exp"] = m.exps;
            t["num"] = numerator_of(c).str();
            t["den"] = denominator_of(c).str();
            comp.push_back(t);
        }
        j["components"].push_back(comp);
    }
    return j;
}

PolyVectorField field_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    PolyVectorField X(n);
    const auto& comps = j.at("components");
    if (static_cast<int>(comps.size()) != n + 1)
        throw std::invalid_argument("field_from_json: wrong component count");
    for (int i = 0; i <= n; ++i)
        for (const auto& t : comps[i])
            X.component(i).add_term(
                Monomial(t.at("exp").get<std::vector<int>>()),
                rat_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
    return X;
}

} // namespace pfaff
