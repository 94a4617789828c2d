#pragma once

// Text and JSON renderings of the sparse polynomials.  Terms follow the
// canonical map order, so equal polynomials always serialize identically.

#include "pd/grothendieck.hpp"
#include "pd/subdivision.hpp"

#include "json.hpp"

#include <string>

namespace pd {

using Json = nlohmann::ordered_json;

// "x[1,2] * x[1,3] + b * x[1,3]"; coefficients prefix their term, beta is b.
std::string to_string(const BetaPolynomial& p);

// "t[1] * t[2] + t[1]^2 + b * t[1]"
std::string to_string(const TPolynomial& p);

// "x[1] + x[2] - y[1] - y[2] + b * x[1] * x[2] - ..."
std::string to_string(const XYBetaPolynomial& p);

// Arrays of term objects; coefficients ride as decimal strings so arbitrary
// precision survives the trip.
Json json_of(const BetaPolynomial& p);
Json json_of(const TPolynomial& p);
Json json_of(const XYBetaPolynomial& p);

BetaPolynomial beta_polynomial_from_json(const Json& j);
TPolynomial t_polynomial_from_json(const Json& j);
XYBetaPolynomial xy_polynomial_from_json(const Json& j);

}  // namespace pd
