#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewpath/twisted.hpp"

using namespace skewpath;

namespace {

LaurentPolynomial half_monomial(RingContext ctx, std::vector<int> doubled) {
  return LaurentPolynomial::monomial(ctx, ExponentVector(std::move(doubled)));
}

int prefix_sum_energy(const std::vector<int>& blocks) {
  int total = 0;
  int running = 0;
  for (int m : blocks) {
    running += m;
    total += running;
  }
  return total;
}

std::vector<TwistedSpectrumPoint> small_twisted(int max_r, int max_m) {
  std::vector<TwistedSpectrumPoint> out;
  for (const auto& bs : oracle::all_strips(max_r, max_m)) out.emplace_back(bs.columns());
  return out;
}

}  // namespace

TEST_CASE("twisted local energy") {
  CHECK(local_energy_twisted(0, 0, 2) == 0);
  CHECK(local_energy_twisted(0, -2, 2) == 0);
  CHECK(local_energy_twisted(-1, 1, 2) == 1);
  CHECK(local_energy_twisted(2, 0, 2) == 0);
  CHECK(local_energy_twisted(-2, 0, 2) == 1);
  CHECK(local_energy_twisted(-1, -1, 2) == 1);
}

TEST_CASE("twisted energy and weight examples") {
  for (int n = 1; n <= 3; ++n) {
    TwistedConfiguration vacuum(n, {});
    CHECK(energy_twisted(vacuum) == 0);
    CHECK(weight_twisted(vacuum) == ExponentVector(std::vector<int>(static_cast<std::size_t>(n), -1)));
  }
  TwistedConfiguration up(1, {1});
  CHECK(energy_twisted(up) == 0);
  CHECK(weight_twisted(up) == ExponentVector({1}));
  TwistedConfiguration down(1, {-1});
  CHECK(energy_twisted(down) == 1);
  CHECK(weight_twisted(down) == ExponentVector({-3}));
  CHECK(h_map_twisted(down) == TwistedSpectrumPoint({1}));
  CHECK(h_map_twisted(up) == TwistedSpectrumPoint({}));

  TwistedConfiguration padded(2, {1, -2, 0, 0});
  CHECK(padded.canonical().prefix() == std::vector<int>{1, -2});
  CHECK(padded == TwistedConfiguration(2, {1, -2}));
  CHECK(padded.letter(7) == 0);
}

TEST_CASE("twisted spectrum points") {
  TwistedSpectrumPoint h({2, 1});
  CHECK(h.size() == 3);
  CHECK(h.h(1) == 0);
  CHECK(h.h(2) == 1);
  CHECK(h.h(3) == 1);
  CHECK(h.h(4) == 0);
  CHECK(energy_twisted(h) == 5);
  CHECK(kappa_twisted(TwistedSpectrumPoint({}), 1) == BorderStrip({2}));
  CHECK(kappa_twisted(TwistedSpectrumPoint({1}), 1) == BorderStrip({1, 2}));
  CHECK(kappa_twisted(TwistedSpectrumPoint({2, 3}), 2) == BorderStrip({2, 3, 4}));
}

TEST_CASE("B_n fundamental data") {
  BnFundamentalData one(1);
  RingContext c1 = one.context();
  CHECK(one.sigma() == half_monomial(c1, {1}) + half_monomial(c1, {-1}));
  CHECK(one.t(-1).is_zero());
  CHECK(one.t(0) == LaurentPolynomial::one(c1));
  CHECK(one.t(1) == half_monomial(c1, {2}) + LaurentPolynomial::one(c1) + half_monomial(c1, {-2}));
  CHECK(one.sigma().pow(2).at_one() == Integer(4));

  BnFundamentalData two(2);
  RingContext c2 = two.context();
  LaurentPolynomial t1 = half_monomial(c2, {2, 0}) + half_monomial(c2, {0, 2}) + LaurentPolynomial::one(c2) +
                         half_monomial(c2, {-2, 0}) + half_monomial(c2, {0, -2});
  CHECK(two.t(1) == t1);
  CHECK(two.exterior(1) == t1);
  CHECK(two.t(1).at_one() == Integer(5));
  CHECK(two.sigma().pow(2).at_one() == Integer(16));
  CHECK(two.t(2) == two.sigma().pow(2) - two.t(1));
  CHECK(two.t(3) == two.sigma().pow(2) - two.t(0));
  CHECK(two.exterior(6).is_zero());
}

TEST_CASE("twisted character examples") {
  BnFundamentalData one(1);
  RingContext c1 = one.context();
  TwistedSpectrumPoint ground({});
  LaurentPolynomial sigma = half_monomial(c1, {1}) + half_monomial(c1, {-1});
  CHECK(chi_twisted_enumerative(ground, 1) == sigma);
  CHECK(chi_twisted_fiber(ground, 1) == sigma);
  CHECK(sL_determinant(ground, 1) == sigma);
  CHECK(enumerate_twisted_fiber(ground, 1).size() == 2);

  LaurentPolynomial four = half_monomial(c1, {3}) + half_monomial(c1, {1}) + half_monomial(c1, {-1}) +
                           half_monomial(c1, {-3});
  TwistedSpectrumPoint single({1});
  CHECK(chi_twisted_enumerative(single, 1) == four);
  CHECK(sL_determinant(single, one) == sigma * (one.t(1) - LaurentPolynomial::one(c1)));
  CHECK(sL_determinant(single, one) == four);

  BnFundamentalData two(2);
  LaurentPolynomial one2 = LaurentPolynomial::one(two.context());
  CHECK(sL_determinant(TwistedSpectrumPoint({2}), two) == two.sigma() * (two.t(2) - one2));
  CHECK(chi_twisted_enumerative(TwistedSpectrumPoint({2}), 2) == two.sigma() * (two.t(2) - one2));
}

TEST_CASE("enumeration, fibers and determinant agree") {
  for (int n = 1; n <= 2; ++n) {
    BnFundamentalData data(n);
    for (const auto& h : small_twisted(3, 3)) {
      LaurentPolynomial det = sL_determinant(h, data);
      CHECK(chi_twisted_enumerative(h, n) == det);
      CHECK(chi_twisted_fiber(h, n) == det);
    }
  }
}

TEST_CASE("fiber configurations reproduce their spectrum point") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& h : small_twisted(3, 3)) {
      std::set<std::vector<int>> distinct;
      int e = energy_twisted(h);
      CHECK(e == prefix_sum_energy(h.blocks()));
      CHECK(e == t_statistic(kappa_twisted(h, n)));
      for (const auto& s : enumerate_twisted_fiber(h, n)) {
        CHECK(h_map_twisted(s) == h);
        CHECK(energy_twisted(s) == e);
        distinct.insert(s.canonical().prefix());
        for (int i = 1; i <= h.size() + 3; ++i) {
          CHECK(h.h(i) == local_energy_twisted(s.letter(i), s.letter(i + 1), n));
        }
      }
      CHECK(static_cast<int>(distinct.size()) == static_cast<int>(enumerate_twisted_fiber(h, n).size()));
    }
  }
}

TEST_CASE("twisted spectrum up to an order") {
  const int order = 6;
  std::set<std::vector<int>> listed;
  for (const auto& h : twisted_spectrum(order)) {
    CHECK(energy_twisted(h) <= order);
    listed.insert(h.blocks());
  }
  std::set<std::vector<int>> expected;
  for (const auto& bs : oracle::all_strips(order, order)) {
    if (prefix_sum_energy(bs.columns()) <= order) expected.insert(bs.columns());
  }
  CHECK(listed == expected);
}

TEST_CASE("twisted level-1 character") {
  QSeries theta = twisted_level1_theta(1, 3);
  CHECK(theta.offset() == Rational(0));
  BnFundamentalData one(1);
  CHECK(theta.coefficient(0) == one.sigma());
  CHECK(twisted_decomposition(1, 3).coefficient(0) == one.sigma());
  for (int n = 1; n <= 2; ++n) {
    QSeries lattice = twisted_level1_theta(n, 4);
    CHECK(twisted_decomposition(n, 4) == lattice);
    CHECK(twisted_fiber_series(n, 4) == lattice);
  }
}
