#pragma once

#include <json.hpp>

#include "omalous/exactmath/matrix.hpp"
#include "omalous/exactmath/polynomial.hpp"
#include "omalous/exactmath/ratfunc.hpp"

namespace omalous::exact {

using Json = nlohmann::json;

// Rationals are always written as strings ("3/2", "-7"); readers also accept
// JSON integers.
Json to_json_value(const Rational& r);
Rational rational_from_json(const Json& j);

// {"vars": [...], "terms": [{"coeff": "3/2", "exps": [2, 0]}, ...]}
Json to_json_value(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const Json& j);

// {"num": <poly>, "den": <poly>}
Json to_json_value(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

// {"vars": [...], "params": [...], "terms": [{"coeff": {"num","den"}, "exps": [...]}]}
Json to_json_value(const RPolynomial& p, const Variables& params);
RPolynomial rpolynomial_from_json(const Json& j);

Json to_json_value(const ExactMatrix<Rational>& m);
ExactMatrix<Rational> rational_matrix_from_json(const Json& j);

}  // namespace omalous::exact
