#include "cmlax/json_io.hpp"

namespace cmlax {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class q_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidArgument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace

nlohmann::json to_json(const GaussianRational& g) {
    nlohmann::json j;
    j["re"] = q_str(g.re);
    j["im"] = q_str(g.im);
    return j;
}

GaussianRational gaussian_from_json(const nlohmann::json& j) {
    return {q_parse(j.at("re").get<std::string>()), q_parse(j.at("im").get<std::string>())};
}

nlohmann::json to_json(const ParamScalar& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) {
        nlohmann::json t;
        t["exp"] = e;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

ParamScalar param_scalar_from_json(const nlohmann::json& j) {
    ParamScalar s;
    for (const auto& t : j) {
        ParamExp e{};
        auto arr = t.at("exp");
        for (std::size_t i = 0; i < kNumParams; ++i) e[i] = arr.at(i).get<std::uint32_t>();
        GaussianRational c = gaussian_from_json(t.at("coeff"));
        ParamScalar term(c);
        for (std::size_t i = 0; i < kNumParams; ++i)
            if (e[i] > 0) term *= ParamScalar::param(i, e[i]);
        s += term;
    }
    return s;
}

nlohmann::json to_json(const Poly& p) {
    nlohmann::json j;
    j["vars"] = p.vars()->names;
    j["position_count"] = p.vars()->position_count;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = e;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const nlohmann::json& j) {
    auto table = std::make_shared<VarTable>();
    table->names = j.at("vars").get<std::vector<std::string>>();
    table->position_count = j.at("position_count").get<std::size_t>();
    Poly p{VarTablePtr(table)};
    for (const auto& t : j.at("terms")) {
        Exp e = t.at("exp").get<Exp>();
        p.add_term(e, param_scalar_from_json(t.at("coeff")));
    }
    return p;
}

nlohmann::json to_json(const RatFunc& f) {
    nlohmann::json j;
    j["num"] = to_json(f.num());
    nlohmann::json den = nlohmann::json::array();
    for (const auto& [form, power] : f.den()) {
        nlohmann::json d;
        std::vector<std::string> coeffs;
        for (const auto& c : form.coeff()) coeffs.push_back(c.get_str());
        d["form"] = coeffs;
        d["power"] = power;
        den.push_back(std::move(d));
    }
    j["den"] = std::move(den);
    return j;
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
    Poly num = poly_from_json(j.at("num"));
    RatFunc::Den den;
    for (const auto& d : j.at("den")) {
        std::vector<mpq_class> coeffs;
        for (const auto& c : d.at("form").get<std::vector<std::string>>())
            coeffs.push_back(q_parse(c));
        auto [form, scale] = LinearForm::canonicalize(coeffs);
        if (scale != 1) throw InvalidArgument("ratfunc_from_json: denominator form not canonical");
        den[form] += d.at("power").get<int>();
    }
    return RatFunc(std::move(num), std::move(den));
}

} // namespace cmlax
