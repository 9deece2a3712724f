#pragma once

// Exact arithmetic kernel: integer Laurent polynomials in q, sparse
// multivariate Laurent polynomials in x_1..x_n with such coefficients,
// truncated q-series with a rational offset, and a few q-combinatorial
// primitives (q-Pochhammer symbols, Gaussian multinomials, determinants).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace skewpath {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// Integer Laurent polynomial in one variable q. No zero coefficient is ever
// stored.
class QCoefficient {
 public:
  QCoefficient() = default;
  QCoefficient(long long constant);  // NOLINT(google-explicit-constructor)
  explicit QCoefficient(Integer constant);

  static QCoefficient monomial(int exponent, Integer coefficient = 1);

  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Integer coefficient(int exponent) const;
  int min_degree() const;
  int max_degree() const;
  Integer at_one() const;

  QCoefficient shifted(int k) const;
  QCoefficient inverted() const;
  // Exact quotient; throws ConsistencyError when the divisor does not divide.
  QCoefficient exact_divide(const QCoefficient& divisor) const;

  void add_term(int exponent, const Integer& coefficient);

  QCoefficient& operator+=(const QCoefficient& other);
  QCoefficient& operator-=(const QCoefficient& other);
  QCoefficient& operator*=(const QCoefficient& other);
  QCoefficient operator-() const;

  friend QCoefficient operator+(QCoefficient a, const QCoefficient& b) { return a += b; }
  friend QCoefficient operator-(QCoefficient a, const QCoefficient& b) { return a -= b; }
  friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
  friend bool operator==(const QCoefficient&, const QCoefficient&) = default;

 private:
  std::map<int, Integer> terms_;
};

// Exponent of a monomial x_1^{e_1}...x_n^{e_n}, stored as 2*e_i so that
// half-integer weights are exact.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> doubled) : doubled_(std::move(doubled)) {}

  static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(n, 0)); }
  static ExponentVector from_integral(std::span<const int> exponents);
  // x_i^{doubled/2}, i is 0-based.
  static ExponentVector unit(int n, int i, int doubled = 2);

  int size() const noexcept { return static_cast<int>(doubled_.size()); }
  int doubled(int i) const { return doubled_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& doubled() const noexcept { return doubled_; }
  bool is_integral() const;
  int doubled_total() const;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  ExponentVector operator-() const;
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<int> doubled_;
};

// rank n and whether x_1 x_2 ... x_n = 1 is imposed.
struct RingContext {
  int rank = 0;
  bool relation = false;

  bool operator==(const RingContext&) const = default;
};

// Canonical representative of an exponent vector in the given ring. With the
// relation on, a multiple of (1,...,1) is subtracted so that the smallest
// entry is 0 (or 1/2 for vectors with half-integer entries).
ExponentVector canonical(ExponentVector e, const RingContext& ctx);

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, QCoefficient>;

  explicit LaurentPolynomial(RingContext ctx) : ctx_(ctx) {}

  static LaurentPolynomial constant(RingContext ctx, const QCoefficient& c);
  static LaurentPolynomial one(RingContext ctx) { return constant(ctx, 1); }
  static LaurentPolynomial monomial(RingContext ctx, ExponentVector e, const QCoefficient& c = 1);
  // x_i^power, i is 0-based.
  static LaurentPolynomial variable(RingContext ctx, int i, int power = 1);

  const RingContext& context() const noexcept { return ctx_; }
  int rank() const noexcept { return ctx_.rank; }
  bool relation() const noexcept { return ctx_.relation; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  QCoefficient coefficient(const ExponentVector& e) const;
  void add_term(ExponentVector e, const QCoefficient& c);

  // The same polynomial read in relation mode.
  LaurentPolynomial reduced() const;
  // x_i -> x_i^{-1}
  LaurentPolynomial x_inverted() const;
  // q -> q^{-1}
  LaurentPolynomial q_inverted() const;
  // q^k * this
  LaurentPolynomial q_shifted(int k) const;
  // exchange x_i and x_j (0-based)
  LaurentPolynomial swapped(int i, int j) const;
  // x_i = 1 for all i
  QCoefficient at_x_one() const;
  // x_i = 1 and q = 1
  Integer at_one() const;
  LaurentPolynomial pow(unsigned exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const QCoefficient& c);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const QCoefficient& c) { return a *= c; }
  friend LaurentPolynomial operator*(const QCoefficient& c, LaurentPolynomial a) { return a *= c; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void require_same_context(const LaurentPolynomial& other) const;

  RingContext ctx_;
  TermMap terms_;
};

// q^{offset} * sum_{j=0}^{order} coefficient(j) q^j, coefficients being
// Laurent polynomials in x (their own q-content is expected to be constant).
class QSeries {
 public:
  QSeries(RingContext ctx, Rational offset, int order);

  // Distributes the q-exponents of p (measured from `offset`) into slots;
  // exponents beyond the order are dropped, negative ones are rejected.
  static QSeries from_polynomial(const LaurentPolynomial& p, Rational offset, int order);
  // q^offset * sum_j c_j q^j with scalar coefficients.
  static QSeries from_integers(RingContext ctx, Rational offset, std::span<const Integer> c);

  const RingContext& context() const noexcept { return ctx_; }
  Rational offset() const noexcept { return offset_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPolynomial& coefficient(int j) const;
  const std::vector<LaurentPolynomial>& coefficients() const noexcept { return coeffs_; }

  // Adds p to the slot j; silently ignores j > order.
  void add_to(int j, const LaurentPolynomial& p);
  QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  // Equal windows (offset and order) and equal coefficients.
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  RingContext ctx_;
  Rational offset_;
  std::vector<LaurentPolynomial> coeffs_;
};

struct SeriesMismatch {
  Rational exponent;
  LaurentPolynomial lhs;
  LaurentPolynomial rhs;
};

// First exponent on the common window where the series differ. Throws
// ContextError if the offsets are not congruent modulo 1.
std::optional<SeriesMismatch> first_mismatch(const QSeries& a, const QSeries& b);

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Exact determinant by Laplace expansion with memoized minors. Throws
// ShapeError for non-square or empty input and ContextError when entries
// live in different rings.
LaurentPolynomial determinant(const PolyMatrix& m);

// e_m of the given list; zero outside 0..vars.size().
LaurentPolynomial elementary_symmetric(int m, std::span<const LaurentPolynomial> vars,
                                       RingContext ctx);
// e_m(x_1, ..., x_n) in the ring ctx.
LaurentPolynomial elementary_symmetric(int m, RingContext ctx);

// (q)_k = (1-q)(1-q^2)...(1-q^k)
QCoefficient q_pochhammer(int k);
// (q)_N / prod (q)_{k_i}
QCoefficient gaussian_multinomial(int total, std::span<const int> parts);
// Coefficients of 1/(q)_inf^power up to q^order.
std::vector<Integer> inverse_euler_power(int power, int order);

std::string to_string(const QCoefficient& c);
std::string to_string(const LaurentPolynomial& p);

}  // namespace skewpath
