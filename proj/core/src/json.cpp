#include "skewpath/json.hpp"

#include "skewpath/errors.hpp"

namespace skewpath {

using nlohmann::json;

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw ParseError("not an integer", j.get<std::string>());
    }
  }
  throw ParseError("expected an integer", j.dump());
}

json to_json(const QCoefficient& c) {
  json out = json::array();
  for (const auto& [e, v] : c.terms()) out.push_back(json::array({e, to_json(v)}));
  return out;
}

QCoefficient q_coefficient_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of [exponent, coefficient] pairs", j.dump());
  QCoefficient c;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
      throw ParseError("expected [exponent, coefficient]", pair.dump());
    }
    c.add_term(pair[0].get<int>(), integer_from_json(pair[1]));
  }
  return c;
}

namespace {

json terms_to_json(const LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"x2", e.doubled()}, {"q", to_json(c)}});
  return terms;
}

RingContext context_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("relation")) {
    throw ParseError("expected an object with \"n\" and \"relation\"", j.dump());
  }
  return {j.at("n").get<int>(), j.at("relation").get<bool>()};
}

void add_terms_from_json(LaurentPolynomial& p, const json& terms) {
  if (!terms.is_array()) throw ParseError("expected a term list", terms.dump());
  for (const auto& t : terms) {
    auto x2 = t.at("x2").get<std::vector<int>>();
    if (static_cast<int>(x2.size()) != p.rank()) throw ParseError("exponent vector of the wrong length", t.dump());
    p.add_term(ExponentVector(std::move(x2)), q_coefficient_from_json(t.at("q")));
  }
}

}  // namespace

json to_json(const LaurentPolynomial& p) {
  return {{"n", p.rank()}, {"relation", p.relation()}, {"terms", terms_to_json(p)}};
}

LaurentPolynomial polynomial_from_json(const json& j) {
  LaurentPolynomial p(context_from_json(j));
  add_terms_from_json(p, j.at("terms"));
  return p;
}

json to_json(const QSeries& s) {
  json coefficients = json::array();
  for (const auto& c : s.coefficients()) coefficients.push_back(terms_to_json(c));
  return {{"n", s.context().rank},
          {"relation", s.context().relation},
          {"offset", to_string(s.offset())},
          {"order", s.order()},
          {"coefficients", coefficients}};
}

QSeries series_from_json(const json& j) {
  RingContext ctx = context_from_json(j);
  QSeries s(ctx, parse_rational(j.at("offset").get<std::string>()), j.at("order").get<int>());
  const auto& coefficients = j.at("coefficients");
  if (!coefficients.is_array() || static_cast<int>(coefficients.size()) != s.order() + 1) {
    throw ParseError("coefficient list does not match the order", j.dump());
  }
  for (int k = 0; k <= s.order(); ++k) {
    LaurentPolynomial p(ctx);
    add_terms_from_json(p, coefficients[static_cast<std::size_t>(k)]);
    s.add_to(k, p);
  }
  return s;
}

json to_json(const Tableau& t) { return {{"shape", to_string(t.shape())}, {"rows", t.rows()}}; }

}  // namespace skewpath
