#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>

#include "oracles.hpp"
#include "skewpath/characters.hpp"
#include "skewpath/schur.hpp"
#include "skewpath/shapes.hpp"
#include "skewpath/spectra.hpp"
#include "skewpath/tableaux.hpp"
#include "skewpath/twisted.hpp"

using namespace skewpath;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

QCoefficient one_plus(int k) {
  QCoefficient c(1);
  c.add_term(k, 1);
  return c;
}

LaurentPolynomial x(RingContext ctx, int i, int power = 1) { return LaurentPolynomial::variable(ctx, i, power); }

LaurentPolynomial q_slice(const LaurentPolynomial& p, int j) {
  LaurentPolynomial out(p.context());
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.coefficient(j);
    if (v != 0) out.add_term(e, QCoefficient(v));
  }
  return out;
}

std::string label(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Outcome kostka_foulkes_criterion() {
  Outcome o;
  KostkaResult r = kostka_foulkes(P({3, 2, 1}));
  QCoefficient product = QCoefficient::monomial(4) * one_plus(1) * one_plus(1) * one_plus(2) * one_plus(3);
  o.require(r.polynomial == product, "K_(3,2,1) = " + to_string(r.polynomial));
  o.require(r.strips.size() == 14, "strip count " + std::to_string(r.strips.size()));
  for (int N = 1; N <= 6; ++N) {
    for (const auto& lambda : partitions_of(N, N)) {
      o.require(kostka_foulkes(lambda).polynomial == kostka_oracle(lambda), "lambda = " + to_string(lambda));
    }
  }
  return o;
}

Outcome rogers_szego_criterion() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 7; ++N) {
      o.require(F_N(N, ctx) == rogers_szego(N, ctx), "n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
    LaurentPolynomial sum(ctx);
    LaurentPolynomial squares(ctx);
    LaurentPolynomial mixed(ctx);
    for (int i = 0; i < n; ++i) {
      sum += x(ctx, i);
      squares += x(ctx, i, 2);
      for (int j = i + 1; j < n; ++j) mixed += x(ctx, i) * x(ctx, j);
    }
    LaurentPolynomial s1 = schur_jacobi_trudi(SkewDiagram(P({1})), ctx);
    LaurentPolynomial s11 = schur_jacobi_trudi(SkewDiagram(P({1, 1})), ctx);
    LaurentPolynomial s2 = schur_jacobi_trudi(SkewDiagram(P({2})), ctx);
    o.require(F_N(1, ctx) == s1, "F_1");
    o.require(F_N(2, ctx) == s11 * QCoefficient::monomial(1) + s2, "F_2");
    o.require(rogers_szego(1, ctx) == sum, "H_1");
    o.require(rogers_szego(2, ctx) == squares + mixed * one_plus(1), "H_2");
  }
  return o;
}

Outcome skew_schur_criterion() {
  Outcome o;
  for (const auto& shape : oracle::all_skew_shapes(8, 4)) {
    for (int n = 1; n <= 4; ++n) {
      RingContext ctx{n, false};
      o.require(schur_enumerative(shape, ctx) == schur_jacobi_trudi(shape, ctx),
                to_string(shape) + " n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    RingContext ctx{n, false};
    for (const auto& bs : oracle::all_strips(4, n)) {
      LaurentPolynomial jt = schur_jacobi_trudi(realize_border_strip(bs), ctx);
      o.require(schur_border_strip_det(bs, ctx) == jt, "det " + to_string(bs));
      o.require(schur_border_strip_recursive(bs, ctx) == jt, "recursion " + to_string(bs));
    }
  }
  return o;
}

Outcome spectral_criterion() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, true};
    for (const auto& bs : oracle::all_strips(6, n)) {
      const auto& m = bs.columns();
      if (bs.size() > 6 || (!m.empty() && m.back() == n)) continue;
      SpectrumPoint h(n, m);
      SkewDiagram shape = realize_border_strip(kappa(h));
      std::string where = "n=" + std::to_string(n) + " h=[" + label(m) + "]";
      o.require(chi_fiber(h) == schur_jacobi_trudi(shape, ctx), where);

      auto fiber = enumerate_fiber(h);
      auto tableaux = enumerate_sst(shape, n);
      o.require(fiber.size() == tableaux.size(), where + " cardinality");
      std::multiset<ExponentVector> lhs;
      std::multiset<ExponentVector> rhs;
      std::set<std::vector<int>> images;
      for (const auto& s : fiber) lhs.insert(canonical(weight(s), ctx));
      for (const auto& t : tableaux) {
        SpinConfiguration s = phi(t, h);
        o.require(h_map(s) == h, where + " phi lands outside the fiber");
        o.require(phi_inverse(s) == t, where + " phi_inverse");
        images.insert(s.canonical().prefix());
        rhs.insert(canonical(t.weight(), ctx));
      }
      o.require(images.size() == tableaux.size(), where + " phi not injective");
      o.require(lhs == rhs, where + " weight multisets");
    }
  }
  return o;
}

Outcome djkmo_criterion() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      QSeries theta = level1_theta(n, k, 6);
      for (auto v : {DecompositionVariant::A, DecompositionVariant::B}) {
        o.require(level1_decomposition(n, k, 6, v) == theta, "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome polychronakos_criterion() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    RingContext ctx{n, false};
    for (int N = 0; N <= 6; ++N) {
      std::string where = "n=" + std::to_string(n) + " N=" + std::to_string(N);
      LaurentPolynomial z = polychronakos_partition(N, ctx);
      o.require(z == sp_N_sum(N, ctx), where + " Sp_N form");
      o.require(z == z_vertex(N, n), where + " vertex form");
      if (N >= 1) {
        o.require(enumerate_motifs(N, n).size() == enumerate_Sp_N(N, n).size(), where + " motif count");
      }
    }
    // The coefficient of q^j is stable from N = n j on; the first three need N >= 2n.
    for (int N = 2 * n; N < 3 * n; ++N) {
      LaurentPolynomial a = polychronakos_partition(N, ctx).reduced();
      LaurentPolynomial b = polychronakos_partition(N + n, ctx).reduced();
      for (int j = 0; j <= 2; ++j) {
        o.require(q_slice(a, j) == q_slice(b, j), "stabilization n=" + std::to_string(n) + " N=" + std::to_string(N));
      }
    }
  }
  return o;
}

Outcome factorization_criterion() {
  Outcome o;
  oracle::Rng rng(2024);
  int checked = 0;
  while (checked < 50) {
    int n = rng.uniform(2, 4);
    BorderStrip bs = oracle::random_strip(rng, 5, n, 2);
    const auto& m = bs.columns();
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (m[i] + m[i + 1] >= n + 1) cuts.push_back(i);
    }
    if (cuts.empty()) continue;
    std::size_t i = cuts[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(cuts.size()) - 1))];
    RingContext ctx{n, false};
    BorderStrip left(std::vector<int>(m.begin(), m.begin() + static_cast<long>(i) + 1));
    BorderStrip right(std::vector<int>(m.begin() + static_cast<long>(i) + 1, m.end()));
    o.require(schur_border_strip_det(bs, ctx) ==
                  schur_border_strip_det(left, ctx) * schur_border_strip_det(right, ctx),
              to_string(bs) + " n=" + std::to_string(n));
    ++checked;
  }
  return o;
}

Outcome complement_criterion() {
  Outcome o;
  auto check = [&o](const SkewDiagram& sd, int n) {
    RingContext ctx{n, true};
    o.require(schur_conjugate_det(sd, n) == schur_jacobi_trudi(complement(sd, n), ctx),
              to_string(sd) + " n=" + std::to_string(n));
    o.require(schur_conjugate_sum(sd, n) == schur_conjugate_det(sd, n), to_string(sd) + " sum form");
  };
  SkewDiagram fig(P({5, 4, 3, 1}), P({3, 2}));
  o.require(complement(fig, 4) == SkewDiagram(P({5, 5, 5, 5, 3, 2}), P({5, 4, 3, 1})), "pictured complement");
  check(fig, 4);
  oracle::Rng rng(4242);
  int checked = 0;
  while (checked < 30) {
    int n = rng.uniform(1, 4);
    SkewDiagram sd = oracle::random_skew(rng, 5, 5);
    if (!is_rank(sd, n)) continue;
    check(sd, n);
    ++checked;
  }
  return o;
}

Outcome gz_criterion() {
  Outcome o;
  Tableau worked(SkewDiagram(P({5, 4, 4, 1}), P({4, 3, 2})), Alphabet::standard(3), {{2}, {1}, {2, 2}, {3}});
  GZScheme expected{3, {P({4, 3, 2}), P({4, 4, 2}), P({5, 4, 4}), P({5, 4, 4, 1})}};
  o.require(gz_from_sst(worked, 3) == expected, "worked example scheme");
  o.require(sst_from_gz(expected) == worked, "worked example tableau");
  o.require(worked.weight() == ExponentVector({2, 6, 2}), "worked example weight");

  struct Case {
    SkewDiagram shape;
    int n;
  };
  std::vector<Case> cases{{SkewDiagram(P({3, 2}), P({1})), 3},
                          {SkewDiagram(P({2, 2}), P({1})), 3},
                          {SkewDiagram(P({3, 3, 1}), P({2, 1})), 3},
                          {SkewDiagram(P({4, 2, 1}), P({2})), 3},
                          {SkewDiagram(P({5, 4, 4, 1}), P({4, 3, 2})), 4}};
  for (const auto& c : cases) {
    auto ts = enumerate_sst(c.shape, c.n);
    o.require(!ts.empty(), to_string(c.shape) + " has no tableaux");
    for (const auto& t : ts) {
      GZScheme g = gz_from_sst(t, c.n);
      o.require(g.is_valid() && g.weight() == t.weight() && sst_from_gz(g) == t, to_string(c.shape));
    }
  }
  return o;
}

Outcome drinfeld_criterion() {
  Outcome o;
  auto p = drinfeld_polynomials(SkewDiagram(P({5, 4, 4, 1}), P({4, 3, 2})), 4);
  std::vector<DrinfeldRoot> p1{{Rational(-3), -1}, {Rational(0), -1}, {Rational(4), -1}};
  std::vector<DrinfeldRoot> p2{{Rational(3, 2), -1}};
  o.require(p[1] == p1, "P_1");
  o.require(p[2] == p2, "P_2");
  for (const auto& [i, roots] : p) {
    if (i >= 3) o.require(roots.empty(), "P_" + std::to_string(i));
  }
  return o;
}

Outcome a_coefficient_criterion() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (int N = 1; N <= 8; ++N) {
      for (int m = 1; m <= std::min(n, N); ++m) {
        o.require(A_direct(N, m, n) == A_closed(N, m), "N=" + std::to_string(N) + " m=" + std::to_string(m));
      }
    }
  }
  for (int N = 2; N <= 8; ++N) {
    for (int m = 2; m <= N; ++m) {
      QCoefficient factor(-1);
      factor.add_term(N - 1, 1);
      o.require(A_direct(N, m) == factor * A_direct(N - 1, m - 1),
                "recursion N=" + std::to_string(N) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome twisted_criterion() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    BnFundamentalData data(n);
    for (const auto& bs : oracle::all_strips(3, 3)) {
      TwistedSpectrumPoint h(bs.columns());
      LaurentPolynomial det = sL_determinant(h, data);
      std::string where = "n=" + std::to_string(n) + " h=[" + label(bs.columns()) + "]";
      o.require(chi_twisted_enumerative(h, n) == det, where + " enumeration");
      o.require(chi_twisted_fiber(h, n) == det, where + " fibers");
    }
    o.require(twisted_decomposition(n, 5) == twisted_level1_theta(n, 5), "series n=" + std::to_string(n));
  }
  RingContext ctx = BnFundamentalData(1).context();
  LaurentPolynomial sigma = LaurentPolynomial::monomial(ctx, ExponentVector({1})) +
                            LaurentPolynomial::monomial(ctx, ExponentVector({-1}));
  TwistedSpectrumPoint ground({});
  o.require(chi_twisted_enumerative(ground, 1) == sigma, "ground enumeration");
  o.require(chi_twisted_fiber(ground, 1) == sigma, "ground fibers");
  o.require(sL_determinant(ground, 1) == sigma, "ground determinant");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double limit_s;  // 0: no runtime bound
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Kostka-Foulkes polynomials", kostka_foulkes_criterion, 5},
      {2, "F_N = H_N and printed examples", rogers_szego_criterion, 30},
      {3, "skew Schur cross-oracles", skew_schur_criterion, 0},
      {4, "spectral decomposition and phi", spectral_criterion, 0},
      {5, "level-1 characters, both variants", djkmo_criterion, 120},
      {6, "Polychronakos equivalence", polychronakos_criterion, 0},
      {7, "factorization", factorization_criterion, 0},
      {8, "conjugate and complement", complement_criterion, 0},
      {9, "GZ bijection", gz_criterion, 0},
      {10, "Drinfeld polynomials", drinfeld_criterion, 0},
      {11, "A-coefficients", a_coefficient_criterion, 0},
      {12, "twisted model", twisted_criterion, 120},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && seconds > c.limit_s) {
      o.pass = false;
      o.detail = "over the time limit";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.name << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!o.pass) std::cout << ": " << o.detail;
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
