#include "omalous/exactmath/serialize.hpp"

#include "omalous/error.hpp"

namespace omalous::exact {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("ParseError", what); }

Variables variables_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) bad(std::string("missing array '") + key + "'");
    std::vector<std::string> names;
    for (const auto& v : j.at(key)) {
        if (!v.is_string()) bad(std::string("'") + key + "' must hold strings");
        names.push_back(v.get<std::string>());
    }
    return Variables(std::move(names));
}

Monomial exps_from_json(const Json& t, std::size_t nvars) {
    if (!t.contains("exps") || !t.at("exps").is_array()) bad("term without 'exps'");
    std::vector<int> e;
    for (const auto& v : t.at("exps")) {
        if (!v.is_number_integer()) bad("exponents must be integers");
        e.push_back(v.get<int>());
    }
    if (e.size() != nvars) bad("exponent vector length does not match 'vars'");
    return Monomial(std::move(e));
}

}  // namespace

Json to_json_value(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    bad("rational must be a string or an integer");
}

Json to_json_value(const QPolynomial& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back({{"coeff", to_json_value(it->second)}, {"exps", it->first.exponents()}});
    }
    return {{"vars", p.vars().names()}, {"terms", terms}};
}

QPolynomial qpolynomial_from_json(const Json& j) {
    if (!j.is_object()) bad("polynomial must be a JSON object");
    const Variables vars = variables_from_json(j, "vars");
    QPolynomial p(vars);
    if (!j.contains("terms") || !j.at("terms").is_array()) bad("polynomial without 'terms'");
    for (const auto& t : j.at("terms")) {
        if (!t.contains("coeff")) bad("term without 'coeff'");
        p.add_term(exps_from_json(t, vars.size()), rational_from_json(t.at("coeff")));
    }
    return p;
}

Json to_json_value(const RationalFunction& f) {
    return {{"num", to_json_value(f.numerator())}, {"den", to_json_value(f.denominator())}};
}

RationalFunction rational_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("rational function needs 'num' and 'den'");
    return RationalFunction(qpolynomial_from_json(j.at("num")), qpolynomial_from_json(j.at("den")));
}

Json to_json_value(const RPolynomial& p, const Variables& params) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back({{"coeff", to_json_value(it->second)}, {"exps", it->first.exponents()}});
    }
    return {{"vars", p.vars().names()}, {"params", params.names()}, {"terms", terms}};
}

RPolynomial rpolynomial_from_json(const Json& j) {
    if (!j.is_object()) bad("polynomial must be a JSON object");
    const Variables vars = variables_from_json(j, "vars");
    const Variables params = variables_from_json(j, "params");
    RPolynomial p(vars);
    if (!j.contains("terms") || !j.at("terms").is_array()) bad("polynomial without 'terms'");
    for (const auto& t : j.at("terms")) {
        if (!t.contains("coeff")) bad("term without 'coeff'");
        RationalFunction c = rational_function_from_json(t.at("coeff"));
        if (!(c.params() == params)) bad("coefficient parameters do not match 'params'");
        p.add_term(exps_from_json(t, vars.size()), c);
    }
    return p;
}

Json to_json_value(const ExactMatrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json_value(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ExactMatrix<Rational> rational_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) bad("matrix row must be an array");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        rows.push_back(std::move(r));
    }
    return ExactMatrix<Rational>(rows);
}

}  // namespace omalous::exact
