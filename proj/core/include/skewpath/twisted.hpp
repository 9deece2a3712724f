#pragma once

// The vertex model over the signed alphabet J = {1 < ... < n < 0 < -n < ... < -1}:
// twisted local energy, fibers, L-admissible characters, the determinant in
// B_n characters, and the level-1 character of the twisted affine algebra.

#include <functional>
#include <vector>

#include "skewpath/characters.hpp"
#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"

namespace skewpath {

// 0 if a < b in J or a = b = 0, else 1.
int local_energy_twisted(int a, int b, int n);

// (a_1, ..., a_m, 0, 0, ...)
class TwistedConfiguration {
 public:
  TwistedConfiguration(int n, std::vector<int> prefix);

  int n() const noexcept { return n_; }
  const std::vector<int>& prefix() const noexcept { return prefix_; }
  int letter(int i) const;
  // Trailing zeros removed.
  TwistedConfiguration canonical() const;

  friend bool operator==(const TwistedConfiguration& a, const TwistedConfiguration& b);

 private:
  int n_;
  std::vector<int> prefix_;
};

// h = (0^{m_1-1} 1, ..., 0^{m_r-1} 1, 0, 0, ...), m_i >= 1.
class TwistedSpectrumPoint {
 public:
  explicit TwistedSpectrumPoint(std::vector<int> blocks);

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  int size() const noexcept;
  int h(int i) const;

  bool operator==(const TwistedSpectrumPoint&) const = default;

 private:
  std::vector<int> blocks_;
};

TwistedSpectrumPoint h_map_twisted(const TwistedConfiguration& s);
// sum_i i H(s_i, s_{i+1})
int energy_twisted(const TwistedConfiguration& s);
// -Lambda_n + sum_i eps_{s_i}, doubled exponents.
ExponentVector weight_twisted(const TwistedConfiguration& s);
// sum_i i h_i = sum_j (m_1 + ... + m_j)
int energy_twisted(const TwistedSpectrumPoint& h);

// <m_1, ..., m_r, 2n>
BorderStrip kappa_twisted(const TwistedSpectrumPoint& h, int n);

// Configurations with local energy sequence h, built letter by letter.
void for_each_twisted_fiber(const TwistedSpectrumPoint& h, int n,
                            const std::function<bool(const TwistedConfiguration&)>& visit);
std::vector<TwistedConfiguration> enumerate_twisted_fiber(const TwistedSpectrumPoint& h, int n);

// Sum of weights over the fiber of h.
LaurentPolynomial chi_twisted_fiber(const TwistedSpectrumPoint& h, int n);
// Sum of weights over L-admissible tableaux of kappa_twisted(h).
LaurentPolynomial chi_twisted_enumerative(const TwistedSpectrumPoint& h, int n);

// sigma = prod (x_i^{1/2} + x_i^{-1/2}) and the t_m of the determinant formula.
class BnFundamentalData {
 public:
  explicit BnFundamentalData(int n);
  int n() const noexcept { return n_; }
  const RingContext& context() const noexcept { return ctx_; }
  const LaurentPolynomial& sigma() const noexcept { return sigma_; }
  // e_m(x_1, ..., x_n, 1, x_1^{-1}, ..., x_n^{-1}), zero outside 0..2n+1.
  const LaurentPolynomial& exterior(int m) const;
  // 0 for m < 0; exterior(m) + exterior(m-2) + ... for m < n; sigma^2 - t_{2n-1-m} otherwise.
  LaurentPolynomial t(int m) const;

 private:
  int n_;
  RingContext ctx_;
  LaurentPolynomial sigma_;
  std::vector<LaurentPolynomial> exterior_;
  LaurentPolynomial zero_;
};

// sigma times the (r+1) x (r+1) determinant in the t_m.
LaurentPolynomial sL_determinant(const TwistedSpectrumPoint& h, const BnFundamentalData& data);
LaurentPolynomial sL_determinant(const TwistedSpectrumPoint& h, int n);

// Block lists whose energy is at most `order`.
std::vector<TwistedSpectrumPoint> twisted_spectrum(int order);

// (1/(q)_inf^n) sum over gamma in Z^n of q^{sum (gamma_i^2 + gamma_i)/2} x^{gamma + 1/2}.
QSeries twisted_level1_theta(int n, int order);
// sum over strips <m_1..m_r, 2n> with t <= order of q^{t} s^L (determinant form).
QSeries twisted_decomposition(int n, int order);
// sum over configurations of energy at most `order` of q^E x^wt, by fibers.
QSeries twisted_fiber_series(int n, int order);

}  // namespace skewpath
