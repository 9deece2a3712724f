#include "skewpath/twisted.hpp"

#include <cmath>
#include <numeric>

#include "skewpath/errors.hpp"
#include "skewpath/tableaux.hpp"

namespace skewpath {

int local_energy_twisted(int a, int b, int n) {
  Alphabet j = Alphabet::signed_b(n);
  if (a == 0 && b == 0) return 0;
  return j.rank(a) < j.rank(b) ? 0 : 1;
}

TwistedConfiguration::TwistedConfiguration(int n, std::vector<int> prefix) : n_(n), prefix_(std::move(prefix)) {
  if (n_ < 1) throw DomainError("rank must be positive");
  Alphabet j = Alphabet::signed_b(n_);
  for (int a : prefix_) (void)j.rank(a);
}

int TwistedConfiguration::letter(int i) const {
  if (i < 1) throw DomainError("positions start at 1");
  return i <= static_cast<int>(prefix_.size()) ? prefix_[static_cast<std::size_t>(i - 1)] : 0;
}

TwistedConfiguration TwistedConfiguration::canonical() const {
  std::vector<int> p = prefix_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return TwistedConfiguration(n_, std::move(p));
}

bool operator==(const TwistedConfiguration& a, const TwistedConfiguration& b) {
  return a.n_ == b.n_ && a.canonical().prefix_ == b.canonical().prefix_;
}

TwistedSpectrumPoint::TwistedSpectrumPoint(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int m : blocks_) {
    if (m < 1) throw DomainError("blocks must be positive");
  }
}

int TwistedSpectrumPoint::size() const noexcept { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

int TwistedSpectrumPoint::h(int i) const {
  if (i < 1) throw DomainError("positions start at 1");
  int end = 0;
  for (int m : blocks_) {
    end += m;
    if (i <= end) return i == end ? 1 : 0;
  }
  return 0;
}

TwistedSpectrumPoint h_map_twisted(const TwistedConfiguration& s) {
  std::vector<int> blocks;
  int run = 0;
  const auto m = static_cast<int>(s.prefix().size());
  for (int i = 1; i <= m; ++i) {
    ++run;
    if (local_energy_twisted(s.letter(i), s.letter(i + 1), s.n()) == 1) {
      blocks.push_back(run);
      run = 0;
    }
  }
  return TwistedSpectrumPoint(std::move(blocks));
}

int energy_twisted(const TwistedConfiguration& s) {
  int e = 0;
  const auto m = static_cast<int>(s.prefix().size());
  for (int i = 1; i <= m; ++i) e += i * local_energy_twisted(s.letter(i), s.letter(i + 1), s.n());
  return e;
}

ExponentVector weight_twisted(const TwistedConfiguration& s) {
  std::vector<int> d(static_cast<std::size_t>(s.n()), -1);
  for (int a : s.prefix()) {
    if (a > 0) d[static_cast<std::size_t>(a - 1)] += 2;
    if (a < 0) d[static_cast<std::size_t>(-a - 1)] -= 2;
  }
  return ExponentVector(std::move(d));
}

int energy_twisted(const TwistedSpectrumPoint& h) {
  int e = 0;
  int p = 0;
  for (int m : h.blocks()) {
    p += m;
    e += p;
  }
  return e;
}

BorderStrip kappa_twisted(const TwistedSpectrumPoint& h, int n) {
  if (n < 1) throw DomainError("rank must be positive");
  std::vector<int> cols = h.blocks();
  cols.push_back(2 * n);
  return BorderStrip(std::move(cols));
}

void for_each_twisted_fiber(const TwistedSpectrumPoint& h, int n,
                            const std::function<bool(const TwistedConfiguration&)>& visit) {
  if (n < 1) throw DomainError("rank must be positive");
  // Past the last block the letters rise strictly inside 1..n and then stay
  // 0, so n further positions suffice.
  const int length = h.size() + n;
  const std::vector<int> letters = Alphabet::signed_b(n).letters();
  std::vector<int> seq(static_cast<std::size_t>(length));
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == length) {
      if (local_energy_twisted(seq.back(), 0, n) != 0) return true;
      return visit(TwistedConfiguration(n, seq).canonical());
    }
    for (int a : letters) {
      if (i > 0 && local_energy_twisted(seq[static_cast<std::size_t>(i - 1)], a, n) != h.h(i)) continue;
      seq[static_cast<std::size_t>(i)] = a;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  if (length == 0) {
    (void)visit(TwistedConfiguration(n, {}));
    return;
  }
  rec(rec, 0);
}

std::vector<TwistedConfiguration> enumerate_twisted_fiber(const TwistedSpectrumPoint& h, int n) {
  std::vector<TwistedConfiguration> out;
  for_each_twisted_fiber(h, n, [&out](const TwistedConfiguration& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

LaurentPolynomial chi_twisted_fiber(const TwistedSpectrumPoint& h, int n) {
  LaurentPolynomial chi(RingContext{n, false});
  for_each_twisted_fiber(h, n, [&chi](const TwistedConfiguration& s) {
    chi.add_term(weight_twisted(s), 1);
    return true;
  });
  return chi;
}

LaurentPolynomial chi_twisted_enumerative(const TwistedSpectrumPoint& h, int n) {
  LaurentPolynomial chi(RingContext{n, false});
  for_each_L_admissible(kappa_twisted(h, n), n, [&chi](const Tableau& t) {
    chi.add_term(t.weight(), 1);
    return true;
  });
  return chi;
}

BnFundamentalData::BnFundamentalData(int n) : n_(n), ctx_{n, false}, sigma_(ctx_), zero_(ctx_) {
  if (n < 1) throw DomainError("rank must be positive");
  sigma_ = LaurentPolynomial::one(ctx_);
  std::vector<LaurentPolynomial> z;
  for (int i = 0; i < n; ++i) {
    LaurentPolynomial factor = LaurentPolynomial::monomial(ctx_, ExponentVector::unit(n, i, 1)) +
                               LaurentPolynomial::monomial(ctx_, ExponentVector::unit(n, i, -1));
    sigma_ *= factor;
    z.push_back(LaurentPolynomial::variable(ctx_, i, 1));
    z.push_back(LaurentPolynomial::variable(ctx_, i, -1));
  }
  z.push_back(LaurentPolynomial::one(ctx_));
  for (int m = 0; m <= 2 * n + 1; ++m) exterior_.push_back(elementary_symmetric(m, z, ctx_));
}

const LaurentPolynomial& BnFundamentalData::exterior(int m) const {
  if (m < 0 || m >= static_cast<int>(exterior_.size())) return zero_;
  return exterior_[static_cast<std::size_t>(m)];
}

LaurentPolynomial BnFundamentalData::t(int m) const {
  if (m < 0) return zero_;
  if (m < n_) {
    LaurentPolynomial sum(ctx_);
    for (int j = m; j >= 0; j -= 2) sum += exterior(j);
    return sum;
  }
  return sigma_ * sigma_ - t(2 * n_ - 1 - m);
}

LaurentPolynomial sL_determinant(const TwistedSpectrumPoint& h, const BnFundamentalData& data) {
  const RingContext ctx = data.context();
  const auto& m = h.blocks();
  const int r = static_cast<int>(m.size());
  const auto size = static_cast<std::size_t>(r + 1);
  PolyMatrix mat(size, std::vector<LaurentPolynomial>(size, LaurentPolynomial(ctx)));
  for (std::size_t b = 0; b < size; ++b) mat[0][b] = LaurentPolynomial::one(ctx);
  if (r > 0) mat[1][0] = LaurentPolynomial::one(ctx);
  // Row a (1..r), column b >= a: t_{m_{r-a+1} + ... + m_{r-b+1}}.
  for (int a = 1; a <= r; ++a) {
    int sum = 0;
    for (int b = a; b <= r; ++b) {
      sum += m[static_cast<std::size_t>(r - b)];
      mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = data.t(sum);
    }
    if (a >= 2) mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(a - 1)] = LaurentPolynomial::one(ctx);
  }
  return data.sigma() * determinant(mat);
}

LaurentPolynomial sL_determinant(const TwistedSpectrumPoint& h, int n) {
  return sL_determinant(h, BnFundamentalData(n));
}

std::vector<TwistedSpectrumPoint> twisted_spectrum(int order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  std::vector<TwistedSpectrumPoint> out;
  std::vector<int> blocks;
  // Each new block of length m after total P raises the energy by P + m.
  auto rec = [&](auto&& self, int total, int energy) -> void {
    out.emplace_back(blocks);
    for (int m = 1; energy + total + m <= order; ++m) {
      blocks.push_back(m);
      self(self, total + m, energy + total + m);
      blocks.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

QSeries twisted_level1_theta(int n, int order) {
  if (n < 1) throw DomainError("rank must be positive");
  RingContext ctx{n, false};
  QSeries lattice(ctx, Rational(0), order);
  const int bound = static_cast<int>(std::sqrt(2.0 * order)) + 1;
  std::vector<int> doubled(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int idx, int e) -> void {
    if (e > order) return;
    if (idx == n) {
      lattice.add_to(e, LaurentPolynomial::monomial(ctx, ExponentVector(doubled)));
      return;
    }
    for (int g = -bound - 1; g <= bound; ++g) {
      doubled[static_cast<std::size_t>(idx)] = 2 * g + 1;
      self(self, idx + 1, e + (g * g + g) / 2);
    }
  };
  rec(rec, 0, 0);
  auto inv = inverse_euler_power(n, order);
  return lattice * QSeries::from_integers(ctx, Rational(0), inv);
}

QSeries twisted_decomposition(int n, int order) {
  BnFundamentalData data(n);
  QSeries series(data.context(), Rational(0), order);
  for (const auto& h : twisted_spectrum(order)) {
    series.add_to(t_statistic(kappa_twisted(h, n)), sL_determinant(h, data));
  }
  return series;
}

QSeries twisted_fiber_series(int n, int order) {
  RingContext ctx{n, false};
  QSeries series(ctx, Rational(0), order);
  for (const auto& h : twisted_spectrum(order)) {
    for_each_twisted_fiber(h, n, [&](const TwistedConfiguration& s) {
      series.add_to(energy_twisted(s), LaurentPolynomial::monomial(ctx, weight_twisted(s)));
      return true;
    });
  }
  return series;
}

}  // namespace skewpath
