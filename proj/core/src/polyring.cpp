#include "skewpath/polyring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "skewpath/errors.hpp"

namespace skewpath {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

long long parse_ll(std::string_view text, std::string_view whole) {
  long long v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("not a rational number", std::string(whole));
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_ll(text, text));
  long long num = parse_ll(text.substr(0, slash), text);
  long long den = parse_ll(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator", std::string(text));
  return Rational(num, den);
}

// ---------------------------------------------------------------- QCoefficient

QCoefficient::QCoefficient(long long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

QCoefficient::QCoefficient(Integer constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

QCoefficient QCoefficient::monomial(int exponent, Integer coefficient) {
  QCoefficient c;
  c.add_term(exponent, coefficient);
  return c;
}

bool QCoefficient::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer QCoefficient::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int QCoefficient::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first;
}

int QCoefficient::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer QCoefficient::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QCoefficient QCoefficient::shifted(int k) const {
  QCoefficient r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

QCoefficient QCoefficient::inverted() const {
  QCoefficient r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

void QCoefficient::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

QCoefficient& QCoefficient::operator+=(const QCoefficient& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QCoefficient& QCoefficient::operator-=(const QCoefficient& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QCoefficient& QCoefficient::operator*=(const QCoefficient& other) {
  *this = *this * other;
  return *this;
}

QCoefficient QCoefficient::operator-() const {
  QCoefficient r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
  QCoefficient r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) {
    const Integer& k = b.terms_.begin()->second;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * k);
    return r;
  }
  if (a.is_constant()) return b * a;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

QCoefficient QCoefficient::exact_divide(const QCoefficient& divisor) const {
  if (divisor.is_zero()) throw ConsistencyError("division by the zero polynomial");
  if (is_zero()) return {};
  // Dense long division from the top degree down.
  const int dlow = divisor.min_degree();
  const int dhigh = divisor.max_degree();
  const int low = min_degree();
  const int high = max_degree();
  std::vector<Integer> rem(static_cast<std::size_t>(high - low + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - low)] = c;
  const Integer& lead = divisor.terms_.rbegin()->second;
  QCoefficient quotient;
  for (int top = high; top - (dhigh - dlow) >= low; --top) {
    const Integer& r = rem[static_cast<std::size_t>(top - low)];
    if (r == 0) continue;
    if (r % lead != 0) throw ConsistencyError("non-exact division of q-polynomials");
    Integer factor = r / lead;
    int qexp = top - dhigh;
    for (const auto& [e, c] : divisor.terms_) {
      rem[static_cast<std::size_t>(e + qexp - low)] -= factor * c;
    }
    quotient.add_term(qexp, factor);
  }
  for (const auto& r : rem) {
    if (r != 0) throw ConsistencyError("non-exact division of q-polynomials");
  }
  return quotient;
}

// -------------------------------------------------------------- ExponentVector

ExponentVector ExponentVector::from_integral(std::span<const int> exponents) {
  std::vector<int> d(exponents.begin(), exponents.end());
  for (auto& v : d) v *= 2;
  return ExponentVector(std::move(d));
}

ExponentVector ExponentVector::unit(int n, int i, int doubled) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  d.at(static_cast<std::size_t>(i)) = doubled;
  return ExponentVector(std::move(d));
}

bool ExponentVector::is_integral() const {
  return std::all_of(doubled_.begin(), doubled_.end(), [](int v) { return v % 2 == 0; });
}

int ExponentVector::doubled_total() const {
  return std::accumulate(doubled_.begin(), doubled_.end(), 0);
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.doubled_.size() != doubled_.size()) throw ContextError("exponent vectors of different rank");
  for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] += other.doubled_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (other.doubled_.size() != doubled_.size()) throw ContextError("exponent vectors of different rank");
  for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] -= other.doubled_[i];
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r = *this;
  for (auto& v : r.doubled_) v = -v;
  return r;
}

ExponentVector canonical(ExponentVector e, const RingContext& ctx) {
  if (e.size() != ctx.rank) throw ContextError("exponent vector length differs from ring rank");
  if (!ctx.relation || ctx.rank == 0) return e;
  int lowest = *std::min_element(e.doubled().begin(), e.doubled().end());
  // Largest even number <= lowest: the shift is a whole power of x_1...x_n.
  int shift = lowest - (((lowest % 2) + 2) % 2);
  if (shift == 0) return e;
  std::vector<int> d = e.doubled();
  for (auto& v : d) v -= shift;
  return ExponentVector(std::move(d));
}

// ---------------------------------------------------------- LaurentPolynomial

LaurentPolynomial LaurentPolynomial::constant(RingContext ctx, const QCoefficient& c) {
  return monomial(ctx, ExponentVector::zero(ctx.rank), c);
}

LaurentPolynomial LaurentPolynomial::monomial(RingContext ctx, ExponentVector e, const QCoefficient& c) {
  LaurentPolynomial p(ctx);
  p.add_term(std::move(e), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(RingContext ctx, int i, int power) {
  if (i < 0 || i >= ctx.rank) throw DomainError("variable index out of range");
  return monomial(ctx, ExponentVector::unit(ctx.rank, i, 2 * power));
}

QCoefficient LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(canonical(e, ctx_));
  return it == terms_.end() ? QCoefficient{} : it->second;
}

void LaurentPolynomial::add_term(ExponentVector e, const QCoefficient& c) {
  if (c.is_zero()) return;
  auto key = canonical(std::move(e), ctx_);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPolynomial::require_same_context(const LaurentPolynomial& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw ContextError("Laurent polynomials from different rings (rank " + std::to_string(ctx_.rank) +
                       (ctx_.relation ? ", relation" : "") + " vs rank " +
                       std::to_string(other.ctx_.rank) + (other.ctx_.relation ? ", relation" : "") +
                       ")");
  }
}

LaurentPolynomial LaurentPolynomial::reduced() const {
  LaurentPolynomial r({ctx_.rank, true});
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::x_inverted() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::q_inverted() const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.inverted());
  return r;
}

LaurentPolynomial LaurentPolynomial::q_shifted(int k) const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.shifted(k));
  return r;
}

LaurentPolynomial LaurentPolynomial::swapped(int i, int j) const {
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> d = e.doubled();
    std::swap(d.at(static_cast<std::size_t>(i)), d.at(static_cast<std::size_t>(j)));
    r.add_term(ExponentVector(std::move(d)), c);
  }
  return r;
}

QCoefficient LaurentPolynomial::at_x_one() const {
  QCoefficient s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Integer LaurentPolynomial::at_one() const { return at_x_one().at_one(); }

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result = one(ctx_);
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const QCoefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_context(b);
  LaurentPolynomial r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

// --------------------------------------------------------------------- QSeries

QSeries::QSeries(RingContext ctx, Rational offset, int order) : ctx_(ctx), offset_(offset) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, LaurentPolynomial(ctx));
}

QSeries QSeries::from_polynomial(const LaurentPolynomial& p, Rational offset, int order) {
  QSeries s(p.context(), offset, order);
  for (const auto& [e, c] : p.terms()) {
    for (const auto& [qe, v] : c.terms()) {
      if (qe < 0) throw DomainError("polynomial has a term below the series offset");
      if (qe > order) continue;
      s.coeffs_[static_cast<std::size_t>(qe)].add_term(e, QCoefficient(v));
    }
  }
  return s;
}

QSeries QSeries::from_integers(RingContext ctx, Rational offset, std::span<const Integer> c) {
  if (c.empty()) throw DomainError("empty coefficient list");
  QSeries s(ctx, offset, static_cast<int>(c.size()) - 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    s.coeffs_[j] = LaurentPolynomial::constant(ctx, QCoefficient(c[j]));
  }
  return s;
}

const LaurentPolynomial& QSeries::coefficient(int j) const {
  if (j < 0 || j > order()) throw DomainError("coefficient index outside the series window");
  return coeffs_[static_cast<std::size_t>(j)];
}

void QSeries::add_to(int j, const LaurentPolynomial& p) {
  if (j < 0) throw DomainError("negative coefficient index");
  if (j > order()) return;
  coeffs_[static_cast<std::size_t>(j)] += p;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order()) throw DomainError("cannot extend a truncated series");
  QSeries r(ctx_, offset_, new_order);
  for (int j = 0; j <= new_order; ++j) r.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(j)];
  return r;
}

namespace {

long long integral_difference(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (d.denominator() != 1) throw ContextError("series offsets differ by a non-integer");
  return d.numerator();
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& other) {
  if (!(ctx_ == other.ctx_)) throw ContextError("series from different rings");
  Rational off = std::min(offset_, other.offset_);
  Rational reach = std::min(offset_ + order(), other.offset_ + other.order());
  if (reach < off) throw DomainError("series windows do not overlap");
  int new_order = static_cast<int>(integral_difference(reach, off));
  QSeries r(ctx_, off, new_order);
  auto accumulate = [&r, off, new_order](const QSeries& s, bool negate) {
    auto shift = static_cast<int>(integral_difference(s.offset_, off));
    for (int j = 0; j <= s.order() && j + shift <= new_order; ++j) {
      const auto& c = s.coeffs_[static_cast<std::size_t>(j)];
      r.coeffs_[static_cast<std::size_t>(j + shift)] += negate ? -c : c;
    }
  };
  accumulate(*this, false);
  accumulate(other, false);
  *this = std::move(r);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  QSeries neg = other;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextError("series from different rings");
  int order = std::min(a.order(), b.order());
  QSeries r(a.ctx_, a.offset_ + b.offset_, order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

std::optional<SeriesMismatch> first_mismatch(const QSeries& a, const QSeries& b) {
  if (!(a.context() == b.context())) throw ContextError("series from different rings");
  Rational reach = std::min(a.offset() + a.order(), b.offset() + b.order());
  RingContext ctx = a.context();
  auto at = [&ctx](const QSeries& s, const Rational& exponent) {
    auto j = integral_difference(exponent, s.offset());
    if (j < 0) return LaurentPolynomial(ctx);
    return s.coefficient(static_cast<int>(j));
  };
  // Coefficients below the later offset must vanish in the earlier series.
  Rational lowest = std::min(a.offset(), b.offset());
  integral_difference(a.offset(), b.offset());
  for (Rational e = lowest; e <= reach; e += 1) {
    auto lhs = e < a.offset() ? LaurentPolynomial(ctx) : at(a, e);
    auto rhs = e < b.offset() ? LaurentPolynomial(ctx) : at(b, e);
    if (!(lhs == rhs)) return SeriesMismatch{e, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ functions

LaurentPolynomial determinant(const PolyMatrix& m) {
  const std::size_t r = m.size();
  if (r == 0) throw ShapeError("determinant of an empty matrix");
  if (r > 24) throw ShapeError("determinant size too large for minor expansion");
  for (const auto& row : m) {
    if (row.size() != r) throw ShapeError("determinant of a non-square matrix");
  }
  const RingContext ctx = m[0][0].context();
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!(v.context() == ctx)) throw ContextError("matrix entries from different rings");
    }
  }
  // minor[mask]: determinant of rows popcount(mask).. r-1 restricted to the
  // columns not in mask.
  const std::uint32_t full = (r == 32) ? ~0U : ((1U << r) - 1U);
  std::vector<std::optional<LaurentPolynomial>> minor(std::size_t{1} << r);
  minor[full] = LaurentPolynomial::one(ctx);
  // Process masks by decreasing popcount so that dependencies are ready.
  std::vector<std::uint32_t> masks(std::size_t{1} << r);
  std::iota(masks.begin(), masks.end(), 0U);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::uint32_t mask : masks) {
    if (mask == full) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    LaurentPolynomial acc(ctx);
    int position = 0;
    for (std::size_t col = 0; col < r; ++col) {
      if (mask & (1U << col)) continue;
      const auto& entry = m[row][col];
      const auto& sub = minor[mask | (1U << col)];
      if (!entry.is_zero() && sub && !sub->is_zero()) {
        if (position % 2 == 0) {
          acc += entry * *sub;
        } else {
          acc -= entry * *sub;
        }
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return *minor[0];
}

LaurentPolynomial elementary_symmetric(int m, std::span<const LaurentPolynomial> vars, RingContext ctx) {
  if (m < 0 || m > static_cast<int>(vars.size())) return LaurentPolynomial(ctx);
  // e[j] after processing a prefix of the variables.
  std::vector<LaurentPolynomial> e(static_cast<std::size_t>(m) + 1, LaurentPolynomial(ctx));
  e[0] = LaurentPolynomial::one(ctx);
  for (const auto& v : vars) {
    for (int j = m; j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
    }
  }
  return e[static_cast<std::size_t>(m)];
}

LaurentPolynomial elementary_symmetric(int m, RingContext ctx) {
  LaurentPolynomial r(ctx);
  if (m < 0 || m > ctx.rank) return r;
  // Direct subset enumeration: each subset of size m is one monomial.
  std::vector<int> chosen(static_cast<std::size_t>(ctx.rank), 0);
  std::fill(chosen.end() - m, chosen.end(), 1);
  do {
    std::vector<int> d(static_cast<std::size_t>(ctx.rank));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = 2 * chosen[i];
    r.add_term(ExponentVector(std::move(d)), 1);
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return r;
}

QCoefficient q_pochhammer(int k) {
  if (k < 0) throw DomainError("q-Pochhammer index must be nonnegative");
  QCoefficient r(1);
  for (int i = 1; i <= k; ++i) {
    QCoefficient factor(1);
    factor.add_term(i, -1);
    r *= factor;
  }
  return r;
}

QCoefficient gaussian_multinomial(int total, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("negative part in Gaussian multinomial");
    sum += p;
  }
  if (sum != total) throw DomainError("parts do not sum to the total");
  QCoefficient denominator(1);
  for (int p : parts) denominator *= q_pochhammer(p);
  return q_pochhammer(total).exact_divide(denominator);
}

std::vector<Integer> inverse_euler_power(int power, int order) {
  if (power < 0 || order < 0) throw DomainError("negative power or order");
  // 1/(q)_inf = sum p(j) q^j; raise to `power` by repeated truncated products.
  std::vector<Integer> partitions(static_cast<std::size_t>(order) + 1, 0);
  partitions[0] = 1;
  for (int part = 1; part <= order; ++part) {
    for (int j = part; j <= order; ++j) {
      partitions[static_cast<std::size_t>(j)] += partitions[static_cast<std::size_t>(j - part)];
    }
  }
  std::vector<Integer> result(static_cast<std::size_t>(order) + 1, 0);
  result[0] = 1;
  for (int p = 0; p < power; ++p) {
    std::vector<Integer> next(result.size(), 0);
    for (std::size_t i = 0; i < result.size(); ++i) {
      if (result[i] == 0) continue;
      for (std::size_t j = 0; i + j < result.size(); ++j) next[i + j] += result[i] * partitions[j];
    }
    result = std::move(next);
  }
  return result;
}

std::string to_string(const QCoefficient& c) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : c.terms()) {
    Integer mag = v < 0 ? Integer(-v) : v;
    out << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

}  // namespace

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < e.size(); ++i) {
      int d = e.doubled(i);
      if (d == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (d != 2) mono += "^" + exponent_text(d);
    }
    if (mono.empty()) {
      out << "(" << to_string(c) << ")";
    } else if (c == QCoefficient(1)) {
      out << mono;
    } else {
      out << "(" << to_string(c) << ")*" << mono;
    }
  }
  return out.str();
}

}  // namespace skewpath
