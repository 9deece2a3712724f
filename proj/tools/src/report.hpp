#pragma once

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

#include "skewpath/polyring.hpp"

namespace skewpath::cli {

// Outcome of comparing the two sides of one identity.
struct Report {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  Rational offset{0};
  int order = 0;
  bool equal = true;
  std::optional<SeriesMismatch> mismatch;
  long long wall_time_ms = -1;

  nlohmann::json to_json() const;
};

Report compare(std::string identity, nlohmann::json parameters, const QSeries& lhs, const QSeries& rhs);
// Polynomials in x and q; the window spans the q-degrees present on either side.
Report compare(std::string identity, nlohmann::json parameters, const LaurentPolynomial& lhs,
               const LaurentPolynomial& rhs);
Report compare(std::string identity, nlohmann::json parameters, const QCoefficient& lhs, const QCoefficient& rhs);

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace skewpath::cli
