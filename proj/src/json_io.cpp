#include "weil/json_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "weil/catalog.hpp"

namespace weil {

nlohmann::json presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["vars"] = p.num_vars();
    j["trunc"] = p.trunc_order();
    auto gens = nlohmann::json::array();
    for (const Monomial& g : p.extra_gens()) gens.push_back(g.exponents);
    j["extra_gens"] = std::move(gens);
    // derived fields, ignored on input
    j["dim"] = p.dim();
    j["height"] = p.height();
    auto basis = nlohmann::json::array();
    for (int i = 0; i < p.dim(); ++i) basis.push_back(p.basis_name(i));
    j["basis"] = std::move(basis);
    return j;
}

PresPtr presentation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("trunc"))
        throw std::invalid_argument("presentation JSON needs \"vars\" and \"trunc\"");
    int vars = j.at("vars").get<int>();
    int trunc = j.at("trunc").get<int>();
    std::vector<Monomial> gens;
    if (j.contains("extra_gens"))
        for (const auto& g : j.at("extra_gens")) gens.emplace_back(g.get<std::vector<int>>());
    return Presentation::make(vars, trunc, std::move(gens));
}

nlohmann::json element_to_json(const WeilElement& a, const std::string& presentation_id) {
    nlohmann::json j;
    if (presentation_id.empty()) j["presentation"] = presentation_to_json(*a.presentation());
    else j["presentation"] = presentation_id;
    auto coeffs = nlohmann::json::array();
    for (int i = 0; i < a.dim(); ++i) {
        if (a.coeff(i) == 0.0) continue;
        nlohmann::json term;
        term["mono"] = a.presentation()->basis()[static_cast<std::size_t>(i)].exponents;
        term["c"] = a.coeff(i);
        coeffs.push_back(std::move(term));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

WeilElement element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("presentation") || !j.contains("coeffs"))
        throw std::invalid_argument("element JSON needs \"presentation\" and \"coeffs\"");
    PresPtr pres;
    const auto& pj = j.at("presentation");
    if (pj.is_string()) pres = parse_algebra_spec(pj.get<std::string>());
    else pres = presentation_from_json(pj);
    WeilElement out = WeilElement::zero(pres);
    for (const auto& term : j.at("coeffs")) {
        Monomial m(term.at("mono").get<std::vector<int>>());
        int idx = pres->basis_index(m);
        if (idx < 0) throw std::invalid_argument("coefficient on monomial outside the basis: " + monomial_name(m));
        out = out + WeilElement::monomial(pres, m, term.at("c").get<double>());
    }
    return out;
}

}  // namespace weil
