#include "report.hpp"

#include <algorithm>

#include "skewpath/json.hpp"

namespace skewpath::cli {

using nlohmann::json;

json Report::to_json() const {
  json j = {{"identity", identity},
            {"parameters", parameters},
            {"window", {{"offset", to_string(offset)}, {"order", order}}},
            {"equal", equal}};
  if (mismatch) {
    j["first_mismatch"] = {{"exponent", to_string(mismatch->exponent)},
                           {"lhs", skewpath::to_json(mismatch->lhs)},
                           {"rhs", skewpath::to_json(mismatch->rhs)}};
  }
  if (wall_time_ms >= 0) j["wall_time_ms"] = wall_time_ms;
  return j;
}

Report compare(std::string identity, json parameters, const QSeries& lhs, const QSeries& rhs) {
  Report r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  r.offset = std::max(lhs.offset(), rhs.offset());
  r.order = std::min(lhs.order() + static_cast<int>(boost::rational_cast<long long>(lhs.offset() - r.offset)),
                     rhs.order() + static_cast<int>(boost::rational_cast<long long>(rhs.offset() - r.offset)));
  r.mismatch = first_mismatch(lhs, rhs);
  r.equal = !r.mismatch.has_value();
  return r;
}

namespace {

void degree_range(const LaurentPolynomial& p, int& lo, int& hi) {
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, c.min_degree());
    hi = std::max(hi, c.max_degree());
  }
}

}  // namespace

Report compare(std::string identity, json parameters, const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  int lo = 0;
  int hi = 0;
  if (!lhs.is_zero() || !rhs.is_zero()) {
    lo = std::numeric_limits<int>::max();
    hi = std::numeric_limits<int>::min();
    degree_range(lhs, lo, hi);
    degree_range(rhs, lo, hi);
  }
  Rational offset(lo);
  return compare(std::move(identity), std::move(parameters), QSeries::from_polynomial(lhs.q_shifted(-lo), offset, hi - lo),
                 QSeries::from_polynomial(rhs.q_shifted(-lo), offset, hi - lo));
}

Report compare(std::string identity, json parameters, const QCoefficient& lhs, const QCoefficient& rhs) {
  RingContext scalar{1, false};
  return compare(std::move(identity), std::move(parameters), LaurentPolynomial::constant(scalar, lhs),
                 LaurentPolynomial::constant(scalar, rhs));
}

}  // namespace skewpath::cli
