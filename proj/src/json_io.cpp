#include "kohn/json_io.hpp"

#include "kohn/errors.hpp"

namespace kohn {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json jt;
        jt["exp"] = t.exp;
        jt["coef"] = rat_to_string(t.coef);
        terms.push_back(std::move(jt));
    }
    Json j;
    j["nvars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    unsigned nvars = j.at("nvars").get<unsigned>();
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
        Term t;
        t.exp = jt.at("exp").get<Exponents>();
        t.coef = rat_from_string(jt.at("coef").get<std::string>());
        terms.push_back(std::move(t));
    }
    return Poly(nvars, std::move(terms));
}

Json basis_to_json(const StandardBasis& sb) {
    Json j;
    j["order"] = sb.order.name();
    Json gens = Json::array();
    for (const auto& g : sb.generators) gens.push_back(poly_to_json(g));
    j["generators"] = std::move(gens);
    if (sb.completed) {
        Json b = Json::array();
        for (const auto& g : sb.basis) b.push_back(poly_to_json(g));
        j["basis"] = std::move(b);
    }
    return j;
}

Json certificate_to_json(const MembershipCertificate& cert) {
    Json j;
    j["unit"] = poly_to_json(cert.unit);
    Json cof = Json::array();
    for (const auto& c : cert.cofactors) cof.push_back(poly_to_json(c));
    j["cofactors"] = std::move(cof);
    j["target"] = poly_to_json(cert.target);
    Json gens = Json::array();
    for (const auto& g : cert.generators) gens.push_back(poly_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

MembershipCertificate certificate_from_json(const Json& j) {
    MembershipCertificate cert;
    cert.unit = poly_from_json(j.at("unit"));
    for (const auto& c : j.at("cofactors")) cert.cofactors.push_back(poly_from_json(c));
    cert.target = poly_from_json(j.at("target"));
    for (const auto& g : j.at("generators")) cert.generators.push_back(poly_from_json(g));
    return cert;
}

Json matrix_to_json(const LinearChange& L) {
    Json rows = Json::array();
    for (const auto& r : L.matrix()) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(rat_to_string(c));
        rows.push_back(std::move(row));
    }
    return rows;
}

LinearChange matrix_from_json(const Json& j) {
    std::vector<std::vector<Rat>> m;
    for (const auto& jr : j) {
        std::vector<Rat> row;
        for (const auto& c : jr) row.push_back(rat_from_string(c.get<std::string>()));
        m.push_back(std::move(row));
    }
    return LinearChange(std::move(m));
}

}  // namespace kohn
