#pragma once

#include <nlohmann/json.hpp>

#include "primform/laurent.hpp"
#include "primform/matrix.hpp"
#include "primform/poly.hpp"
#include "primform/primitive.hpp"
#include "primform/sseries.hpp"

namespace primform {

using Json = nlohmann::ordered_json;

/// Canonical records. Equal values serialize identically. Parse failures
/// throw ParseError.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [{exponents: [...], coeff: "p/q"}, ...], graded-lex ascending.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, std::size_t nvars);

Json to_json(const SSeries& s);
SSeries sseries_from_json(const Json& j, std::size_t nparams, int order);

/// {mu, nparams, order, z_terms: [{z, components: [series...]}]}, z ascending.
Json to_json(const LaurentBlock& b);
LaurentBlock laurent_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {order, zeta, J}
Json to_json(const PrimitiveFormResult& r);
PrimitiveFormResult primitive_result_from_json(const Json& j);

}  // namespace primform
