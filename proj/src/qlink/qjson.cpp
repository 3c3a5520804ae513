#include "qjson.hpp"

#include "errors.hpp"

namespace qlink {

Json laurent_to_json(const LaurentPoly& p) {
    Json vars = Json::array();
    for (const auto& v : p.vars()) {
        Json jv;
        jv["name"] = v.name;
        jv["scale"] = v.scale;
        vars.push_back(std::move(jv));
    }
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json jt;
        jt["e"] = k;
        jt["c"] = rat_to_string(c);
        terms.push_back(std::move(jt));
    }
    Json out;
    out["vars"] = std::move(vars);
    out["terms"] = std::move(terms);
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs 'vars' and 'terms'");
    std::vector<LVar> vars;
    for (const auto& jv : j.at("vars")) {
        LVar v;
        v.name = jv.at("name").get<std::string>();
        v.scale = jv.at("scale").get<int32_t>();
        if (v.scale < 1) throw ParseError("variable scale must be positive");
        if (!vars.empty() && vars.back().name >= v.name)
            throw ParseError("variables out of order");
        vars.push_back(std::move(v));
    }
    LaurentPoly p;
    for (const auto& jt : j.at("terms")) {
        const auto& je = jt.at("e");
        if (je.size() != vars.size()) throw ParseError("exponent arity mismatch");
        Rat c = rat_from_string(jt.at("c").get<std::string>());
        LaurentPoly term = LaurentPoly::constant(c);
        for (size_t i = 0; i < vars.size(); ++i) {
            int32_t e = je[i].get<int32_t>();
            if (e != 0) term *= LaurentPoly::monomial(vars[i], e);
        }
        p += term;
    }
    return p;
}

std::string json_dump(const Json& j) { return j.dump(); }

}  // namespace qlink
