#include <doctest.h>

#include "oracles.hpp"
#include "skewpath/characters.hpp"
#include "skewpath/schur.hpp"
#include "skewpath/spectra.hpp"

using namespace skewpath;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

LaurentPolynomial x(RingContext ctx, int i, int power = 1) { return LaurentPolynomial::variable(ctx, i, power); }

LaurentPolynomial s(const Partition& lambda, RingContext ctx) { return schur_jacobi_trudi(SkewDiagram(lambda), ctx); }

QCoefficient poly(std::initializer_list<std::pair<int, int>> terms) {
  QCoefficient c;
  for (auto [e, v] : terms) c.add_term(e, v);
  return c;
}

// Coefficient of q^j as a q-free polynomial.
LaurentPolynomial q_slice(const LaurentPolynomial& p, int j) {
  LaurentPolynomial out(p.context());
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.coefficient(j);
    if (v != 0) out.add_term(e, QCoefficient(v));
  }
  return out;
}

LaurentPolynomial q_truncated(const LaurentPolynomial& p, int order) {
  LaurentPolynomial out(p.context());
  for (const auto& [e, c] : p.terms()) {
    QCoefficient kept;
    for (const auto& [k, v] : c.terms()) {
      if (k <= order) kept.add_term(k, v);
    }
    out.add_term(e, kept);
  }
  return out;
}

// h_N of the alphabet {x_i q^j : j <= order}, by multisets.
LaurentPolynomial complete_homogeneous_q(int N, RingContext ctx, int order) {
  std::vector<LaurentPolynomial> letters;
  for (int i = 0; i < ctx.rank; ++i) {
    for (int j = 0; j <= order; ++j) letters.push_back(x(ctx, i) * QCoefficient::monomial(j));
  }
  LaurentPolynomial total(ctx);
  std::function<void(std::size_t, int, const LaurentPolynomial&)> rec = [&](std::size_t from, int left,
                                                                           const LaurentPolynomial& acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (std::size_t l = from; l < letters.size(); ++l) rec(l, left - 1, acc * letters[l]);
  };
  rec(0, N, LaurentPolynomial::one(ctx));
  return total;
}

// Sum of q^{energy(h)} chi_fiber(h) over normal block lists of sector k.
QSeries fiber_theta(int n, int k, int order) {
  RingContext ctx{n, true};
  QSeries out(ctx, delta(n, k), order);
  for (const auto& bs : oracle::all_strips(order + 2, n)) {
    const auto& m = bs.columns();
    if (!m.empty() && m.back() == n) continue;
    if (bs.size() % n != k) continue;
    SpectrumPoint h(n, m);
    int e = energy(h);
    if (e <= order) out.add_to(e, chi_fiber(h));
  }
  return out;
}

}  // namespace

TEST_CASE("Rogers-Szego examples") {
  RingContext three{3, false};
  CHECK(rogers_szego(0, three) == LaurentPolynomial::one(three));
  CHECK(rogers_szego(1, three) == x(three, 0) + x(three, 1) + x(three, 2));
  LaurentPolynomial squares = x(three, 0, 2) + x(three, 1, 2) + x(three, 2, 2);
  LaurentPolynomial mixed = x(three, 0) * x(three, 1) + x(three, 0) * x(three, 2) + x(three, 1) * x(three, 2);
  CHECK(rogers_szego(2, three) == squares + mixed * poly({{0, 1}, {1, 1}}));

  RingContext two{2, false};
  LaurentPolynomial e1 = elementary_symmetric(1, two);
  CHECK(rogers_szego_recursive(2, two) == e1 * e1 - elementary_symmetric(2, two) * poly({{0, 1}, {1, -1}}));
  CHECK(rogers_szego_recursive(1, two) == e1);
}

TEST_CASE("Rogers-Szego at q = 1 and by recursion") {
  for (int n = 1; n <= 3; ++n) {
    RingContext ctx{n, false};
    LaurentPolynomial e1 = elementary_symmetric(1, ctx);
    for (int N = 0; N <= 6; ++N) {
      LaurentPolynomial h = rogers_szego(N, ctx);
      CHECK(oracle::at_q_one(h) == e1.pow(static_cast<unsigned>(N)));
      CHECK(rogers_szego_recursive(N, ctx) == h);
    }
  }
}

TEST_CASE("generating function of the Rogers-Szego polynomials") {
  const int order = 6;
  for (int n = 1; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 4; ++N) {
      LaurentPolynomial lhs = complete_homogeneous_q(N, ctx, order) * q_pochhammer(N);
      CHECK(q_truncated(lhs, order) == q_truncated(rogers_szego(N, ctx), order));
    }
  }
}

TEST_CASE("F_N examples and F_N = H_N") {
  RingContext three{3, false};
  CHECK(F_N(0, three) == LaurentPolynomial::one(three));
  CHECK(F_N(1, three) == s(P({1}), three));
  CHECK(F_N(2, three) == s(P({1, 1}), three) * QCoefficient::monomial(1) + s(P({2}), three));
  for (int n = 1; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 5; ++N) CHECK(F_N(N, ctx) == rogers_szego(N, ctx));
  }
}

TEST_CASE("A coefficients") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(A_direct(N, 1) == QCoefficient(1));
    CHECK(A_closed(N, 1) == QCoefficient(1));
  }
  CHECK(A_closed(3, 2) == poly({{0, -1}, {2, 1}}));
  CHECK(A_direct(3, 2) == A_closed(3, 2));

  for (int n = 1; n <= 4; ++n) {
    for (int N = 1; N <= 7; ++N) {
      for (int m = 1; m <= std::min(n, N); ++m) CHECK(A_direct(N, m, n) == A_closed(N, m));
    }
  }
  for (int N = 2; N <= 7; ++N) {
    for (int m = 2; m <= N; ++m) {
      QCoefficient previous = A_direct(N - 1, m - 1);
      CHECK(A_direct(N, m) == poly({{0, -1}, {N - 1, 1}}) * previous);
      auto [ending_in_one, raised] = A_split(N, m);
      CHECK(ending_in_one == -previous);
      CHECK(raised == previous.shifted(N - 1));
      CHECK(ending_in_one + raised == A_direct(N, m));
    }
  }
}

TEST_CASE("level-1 theta series") {
  CHECK(delta(2, 1) == Rational(1, 4));
  CHECK(delta(3, 0) == Rational(0));
  CHECK(delta(4, 2) == Rational(1, 2));

  QSeries vacuum = level1_theta(2, 0, 3);
  CHECK(vacuum.offset() == Rational(0));
  CHECK(vacuum.coefficient(0) == LaurentPolynomial::one(RingContext{2, true}));
  CHECK(level1_theta(2, 1, 3).offset() == Rational(1, 4));
  CHECK(level1_theta(4, 0, 1).coefficient(1).at_one() == Integer(15));
}

TEST_CASE("decomposition examples") {
  RingContext two{2, true};
  QSeries d = level1_decomposition(2, 1, 2, DecompositionVariant::A);
  CHECK(d.offset() == Rational(1, 4));
  CHECK(d.coefficient(0) == s(P({1}), two));
  CHECK(level1_decomposition(3, 0, 2, DecompositionVariant::A).coefficient(0) ==
        LaurentPolynomial::one(RingContext{3, true}));

  for (const auto& term : level1_strips(3, 1, 4)) {
    CHECK(term.exponent >= 0);
    CHECK(term.exponent <= 4);
    CHECK(term.strip.size() % 3 == 1);
    if (!term.strip.empty()) CHECK(term.strip.columns().back() < 3);
  }
}

TEST_CASE("theta equals both decompositions") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < n; ++k) {
      QSeries theta = level1_theta(n, k, 4);
      CHECK(level1_decomposition(n, k, 4, DecompositionVariant::A) == theta);
      CHECK(level1_decomposition(n, k, 4, DecompositionVariant::B) == theta);
    }
  }
}

TEST_CASE("theta equals the energy-weighted fiber sum") {
  for (int k = 0; k < 2; ++k) CHECK(fiber_theta(2, k, 4) == level1_theta(2, k, 4));
  for (int k = 0; k < 3; ++k) CHECK(fiber_theta(3, k, 3) == level1_theta(3, k, 3));
}

TEST_CASE("Polychronakos partition function") {
  RingContext two{2, false};
  CHECK(polychronakos_partition(0, two) == LaurentPolynomial::one(two));
  CHECK(polychronakos_ground_shift(2, 2) == 1);
  LaurentPolynomial z2 = (x(two, 0, 2) + x(two, 1, 2)) * QCoefficient::monomial(1) +
                         x(two, 0) * x(two, 1) * poly({{0, 1}, {1, 1}});
  CHECK(polychronakos_partition(2, two) == z2);
  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 5; ++N) {
      LaurentPolynomial z = polychronakos_partition(N, ctx);
      CHECK(z == sp_N_sum(N, ctx));
      CHECK(z == rogers_szego(N, ctx).q_inverted().q_shifted(static_cast<int>(polychronakos_ground_shift(N, n))));
    }
  }
}

TEST_CASE("low coefficients stabilize once N >= n j") {
  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, false};
    std::vector<LaurentPolynomial> z;
    for (int N = 0; N <= 3 * n + n; ++N) z.push_back(polychronakos_partition(N, ctx).reduced());
    for (int N = 0; N + n < static_cast<int>(z.size()); ++N) {
      QSeries theta = level1_theta(n, N % n, 3);
      for (int j = 0; j <= 3 && n * j <= N; ++j) {
        CHECK(q_slice(z[static_cast<std::size_t>(N)], j) == q_slice(z[static_cast<std::size_t>(N + n)], j));
        CHECK(q_slice(z[static_cast<std::size_t>(N)], j) == theta.coefficient(j));
      }
    }
  }
}

TEST_CASE("Kostka-Foulkes examples") {
  KostkaResult r = kostka_foulkes(P({3, 2, 1}));
  QCoefficient expected = QCoefficient::monomial(4) * poly({{0, 1}, {1, 1}}) * poly({{0, 1}, {1, 1}}) *
                          poly({{0, 1}, {2, 1}}) * poly({{0, 1}, {3, 1}});
  CHECK(r.polynomial == expected);
  CHECK(r.strips.size() == 14);
  QCoefficient audit;
  for (const auto& term : r.strips) {
    CHECK(term.lr > 0);
    CHECK(term.t == t_statistic(term.strip));
    audit += QCoefficient::monomial(term.t, term.lr);
  }
  CHECK(audit == r.polynomial);

  CHECK(kostka_foulkes(P({1})).polynomial == QCoefficient(1));
  CHECK(kostka_oracle(P({1})) == QCoefficient(1));
  CHECK(kostka_foulkes(P({1, 1})).polynomial == QCoefficient(1));
  CHECK(kostka_foulkes(P({2})).polynomial == QCoefficient::monomial(1));
  CHECK(kostka_foulkes(P({3})).polynomial == QCoefficient::monomial(3));
}

TEST_CASE("Kostka-Foulkes against two oracles") {
  for (int N = 1; N <= 6; ++N) {
    for (const auto& lambda : partitions_of(N, N)) {
      QCoefficient hook = oracle::hook_kostka(lambda);
      CHECK(kostka_oracle(lambda) == hook);
      CHECK(kostka_foulkes(lambda).polynomial == hook);
      if (N <= 4) CHECK(kostka_foulkes(lambda, lambda.length() + 1).polynomial == hook);
    }
  }
}

TEST_CASE("Kostka-Foulkes at q = 1 counts dimensions") {
  for (int n = 1; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 4; ++N) {
      Integer total = 0;
      for (const auto& lambda : partitions_of(N, n)) {
        total += kostka_oracle(lambda).at_one() * s(lambda, ctx).at_one();
      }
      Integer expected = 1;
      for (int i = 0; i < N; ++i) expected *= n;
      CHECK(total == expected);
    }
  }
}

TEST_CASE("branching functions") {
  QSeries vacuum = branching_function(2, 0, P({}), 2);
  CHECK(vacuum.coefficient(0) == LaurentPolynomial::one(RingContext{2, true}));

  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, true};
    for (int k = 0; k < n; ++k) {
      const int order = 4;
      QSeries total(ctx, delta(n, k), order);
      for (const auto& lambda : branching_labels(n, k, order)) {
        CHECK(lambda.length() < n);
        CHECK(lambda.size() % n == k);
        QSeries b = branching_function(n, k, lambda, order);
        LaurentPolynomial sl = s(lambda, ctx);
        for (int j = 0; j <= order; ++j) total.add_to(j, b.coefficient(j) * sl);
      }
      CHECK(total == level1_decomposition(n, k, order, DecompositionVariant::A));
    }
  }
}
