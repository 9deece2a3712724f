#pragma once

// JSON encodings of the core value types.
//   polynomial: {"n", "relation", "terms": [{"x2": [...], "q": [[e, c], ...]}]}
//   series:     polynomial ring fields plus "offset" ("p/q"), "order" and
//               "coefficients" (one term list per power of q)
//   tableau:    {"shape": "lambda/mu", "rows": [[...], ...]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <nlohmann/json.hpp>

#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"
#include "skewpath/tableaux.hpp"

namespace skewpath {

nlohmann::json to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QCoefficient& c);
QCoefficient q_coefficient_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tableau& t);

}  // namespace skewpath
