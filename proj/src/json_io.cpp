#include "jkres/json_io.hpp"

namespace jkres {

namespace {

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw Error(ErrorCode::BadInput, "expected an integer or a rational string");
}

Int int_from_json(const Json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        Rational q = Rational::parse(v.get<std::string>());
        if (!q.is_integer()) throw Error(ErrorCode::BadInput, "expected an integer");
        return q.to_int();
    }
    throw Error(ErrorCode::BadInput, "expected an integer");
}

} // namespace

LinearSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("betas") || !j["betas"].is_array())
        throw Error(ErrorCode::BadInput, "expected {\"betas\": [[..],..]}");
    std::vector<IntVec> betas;
    for (const Json& row : j["betas"]) {
        if (!row.is_array()) throw Error(ErrorCode::BadInput, "each beta must be an array");
        IntVec b;
        b.reserve(row.size());
        for (const Json& v : row) b.push_back(int_from_json(v));
        betas.push_back(std::move(b));
    }
    return new_system(betas);
}

Json system_to_json(const LinearSystem& s) {
    Json betas = Json::array();
    for (const IntVec& b : s.betas) {
        Json row = Json::array();
        for (const Int& x : b) {
            if (x.fits_slong_p())
                row.push_back(x.get_si());
            else
                row.push_back(int_to_string(x));
        }
        betas.push_back(std::move(row));
    }
    return Json{{"betas", std::move(betas)}};
}

RatVec rat_vec_from_json(const Json& j, int expected_len) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an array");
    if (expected_len >= 0 && static_cast<int>(j.size()) != expected_len)
        throw Error(ErrorCode::BadInput, "vector has wrong length");
    RatVec out;
    out.reserve(j.size());
    for (const Json& v : j) out.push_back(rational_from_json(v));
    return out;
}

IntVec int_vec_from_json(const Json& j, int expected_len) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an array");
    if (expected_len >= 0 && static_cast<int>(j.size()) != expected_len)
        throw Error(ErrorCode::BadInput, "vector has wrong length");
    IntVec out;
    out.reserve(j.size());
    for (const Json& v : j) out.push_back(int_from_json(v));
    return out;
}

Json rat_vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(q.str());
    return out;
}

Json int_vec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_to_string(x));
    return out;
}

Json chamber_to_json(const Chamber& c) {
    Json bases = Json::array();
    for (const auto& basis : c.feasible_bases) {
        Json b = Json::array();
        for (int i : basis) b.push_back(i);
        bases.push_back(std::move(b));
    }
    return Json{{"representative", rat_vec_to_json(c.representative)},
                {"feasible_bases", std::move(bases)}};
}

Json poly_to_json(const MPoly<Rational>& p, int nvars) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) { // map iteration: already sorted by exponents
        Json exps = Json::array();
        for (int i = 0; i < nvars; ++i)
            exps.push_back(i < static_cast<int>(e.size()) ? e[i] : 0);
        terms.push_back(Json{{"exponents", std::move(exps)}, {"coeff", c.str()}});
    }
    return terms;
}

MPoly<Rational> poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected a term array");
    MPoly<Rational> p;
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
            throw Error(ErrorCode::BadInput, "each term needs \"exponents\" and \"coeff\"");
        std::vector<int> e;
        for (const Json& x : term["exponents"]) {
            if (!x.is_number_integer()) throw Error(ErrorCode::BadInput, "bad exponent");
            e.push_back(x.get<int>());
        }
        p.add_term(std::move(e), rational_from_json(term["coeff"]));
    }
    return p;
}

Json ehrhart_to_json(const EhrhartPolynomial& e) {
    Json out = Json::array();
    for (const Rational& c : e.coefficients) out.push_back(c.str());
    return out;
}

} // namespace jkres
