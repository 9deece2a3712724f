#include "skewpath/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skewpath/errors.hpp"
#include "skewpath/schur.hpp"
#include "skewpath/spectra.hpp"
#include "skewpath/tableaux.hpp"

namespace skewpath {

namespace {

// All compositions of `total` into `parts` nonnegative pieces, lex order.
void for_each_weak_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> k(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == parts - 1) {
      k[static_cast<std::size_t>(idx)] = remaining;
      visit(k);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      k[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(k);
    return;
  }
  rec(rec, 0, total);
}

// Compositions of `total` with parts in 1..max_part (max_part <= 0: unbounded).
void for_each_composition(int total, int max_part, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    int cap = max_part > 0 ? std::min(max_part, remaining) : remaining;
    for (int m = 1; m <= cap; ++m) {
      parts.push_back(m);
      self(self, remaining - m);
      parts.pop_back();
    }
  };
  rec(rec, total);
}

void require_rank(const RingContext& ctx) {
  if (ctx.rank < 1) throw DomainError("rank must be positive");
}

}  // namespace

LaurentPolynomial rogers_szego(int N, RingContext ctx) {
  require_rank(ctx);
  if (N < 0) throw DomainError("N must be nonnegative");
  LaurentPolynomial h(ctx);
  for_each_weak_composition(N, ctx.rank, [&](const std::vector<int>& k) {
    h.add_term(ExponentVector::from_integral(k), gaussian_multinomial(N, k));
  });
  return h;
}

LaurentPolynomial rogers_szego_recursive(int N, RingContext ctx) {
  require_rank(ctx);
  if (N < 0) throw DomainError("N must be nonnegative");
  ElementaryTable e(ctx);
  std::vector<LaurentPolynomial> H{LaurentPolynomial::one(ctx)};
  for (int M = 1; M <= N; ++M) {
    LaurentPolynomial next(ctx);
    for (int i = 1; i <= std::min(ctx.rank, M); ++i) {
      QCoefficient ratio = q_pochhammer(M - 1).exact_divide(q_pochhammer(M - i));
      if (i % 2 == 0) ratio = -ratio;
      next += ratio * (e(i) * H[static_cast<std::size_t>(M - i)]);
    }
    H.push_back(std::move(next));
  }
  return H.back();
}

LaurentPolynomial F_N(int N, RingContext ctx) {
  require_rank(ctx);
  if (N < 0) throw DomainError("N must be nonnegative");
  StripSchurCache s(ctx);
  LaurentPolynomial f(ctx);
  if (N == 0) return LaurentPolynomial::one(ctx);
  for_each_composition(N, ctx.rank, [&](const std::vector<int>& m) {
    int exponent = N * (N + 1) / 2;
    int prefix = 0;
    for (int v : m) {
      prefix += v;
      exponent -= prefix;
    }
    f += QCoefficient::monomial(exponent) * s(BorderStrip(m));
  });
  return f;
}

namespace {

int c_exponent(int N, int m, const std::vector<int>& k) {
  int c = N * (m - static_cast<int>(k.size())) - m * (m + 1) / 2;
  for (std::size_t i = 0; i < k.size(); ++i) c += static_cast<int>(i + 1) * k[i];
  return c;
}

void add_signed(QCoefficient& acc, std::size_t j, int exponent) {
  acc.add_term(exponent, j % 2 == 1 ? 1 : -1);
}

}  // namespace

QCoefficient A_direct(int N, int m, int max_part) {
  if (m < 1 || N < m) throw DomainError("A_{N,m} needs 1 <= m <= N");
  QCoefficient a;
  for_each_composition(m, max_part, [&](const std::vector<int>& k) { add_signed(a, k.size(), c_exponent(N, m, k)); });
  return a;
}

QCoefficient A_closed(int N, int m) {
  if (m < 1 || N < m) throw DomainError("A_{N,m} needs 1 <= m <= N");
  QCoefficient a = q_pochhammer(N - 1).exact_divide(q_pochhammer(N - m));
  return m % 2 == 1 ? a : -a;
}

std::pair<QCoefficient, QCoefficient> A_split(int N, int m) {
  if (m < 2 || N < m) throw DomainError("the split needs 2 <= m <= N");
  QCoefficient ending_in_one;
  QCoefficient raised_last;
  for_each_composition(m - 1, 0, [&](const std::vector<int>& k) {
    std::vector<int> appended = k;
    appended.push_back(1);
    add_signed(ending_in_one, appended.size(), c_exponent(N, m, appended));
    std::vector<int> raised = k;
    ++raised.back();
    add_signed(raised_last, raised.size(), c_exponent(N, m, raised));
  });
  return {ending_in_one, raised_last};
}

Rational delta(int n, int k) {
  if (n < 1 || k < 0 || k >= n) throw DomainError("sector must lie in 0..n-1");
  return Rational(k * (n - k), 2 * n);
}

QSeries level1_theta(int n, int k, int order) {
  RingContext ctx{n, true};
  Rational offset = delta(n, k);
  QSeries lattice(ctx, offset, order);
  // sum a_i^2 <= 2*order + k bounds every entry.
  const int bound = static_cast<int>(std::sqrt(2.0 * order + k)) + 1;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int idx, int sum, int squares) -> void {
    if (idx == n - 1) {
      int last = k - sum;
      int total = squares + last * last;
      if ((total - k) % 2 != 0) throw ConsistencyError("odd theta exponent");
      int e = (total - k) / 2;
      if (e > order) return;
      a[static_cast<std::size_t>(idx)] = last;
      lattice.add_to(e, LaurentPolynomial::monomial(ctx, ExponentVector::from_integral(a)));
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      a[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, sum + v, squares + v * v);
    }
  };
  rec(rec, 0, 0, 0);
  auto inv = inverse_euler_power(n - 1, order);
  return lattice * QSeries::from_integers(ctx, Rational(0), inv);
}

std::vector<StripTerm> level1_strips(int n, int k, int order) {
  if (n < 1 || k < 0 || k >= n) throw DomainError("sector must lie in 0..n-1");
  if (order < 0) throw DomainError("order must be nonnegative");
  std::vector<StripTerm> out;
  // Blocks are placed from the right end of the list. With c blocks placed
  // and total length D, the exponent equals
  //   sum over blocks c and cells d of the block (c - ceil(d/n)),
  // which is |kappa|(n-|kappa|)/2n + t(kappa) - Delta_k. The first block
  // contributes 0 and every later block at least 1, so the search is finite.
  std::vector<int> reversed;
  auto ceil_div = [n](int d) { return (d + n - 1) / n; };
  auto rec = [&](auto&& self, int D, int E) -> void {
    if (D % n == k) {
      out.push_back({BorderStrip(std::vector<int>(reversed.rbegin(), reversed.rend())), E});
    }
    const int c = static_cast<int>(reversed.size()) + 1;
    const int max_m = c == 1 ? n - 1 : n;
    for (int m = 1; m <= max_m; ++m) {
      int inc = 0;
      for (int d = D + 1; d <= D + m; ++d) inc += c - ceil_div(d);
      if (E + inc > order) continue;
      reversed.push_back(m);
      self(self, D + m, E + inc);
      reversed.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const StripTerm& a, const StripTerm& b) {
    return std::tie(a.exponent, a.strip) < std::tie(b.exponent, b.strip);
  });
  return out;
}

QSeries level1_decomposition(int n, int k, int order, DecompositionVariant variant) {
  RingContext ctx{n, true};
  QSeries series(ctx, delta(n, k), order);
  if (variant == DecompositionVariant::A) {
    StripSchurCache s(ctx);
    for (const auto& term : level1_strips(n, k, order)) series.add_to(term.exponent, s(term.strip));
  } else {
    for (const auto& term : level1_strips(n, (n - k) % n, order)) {
      series.add_to(term.exponent, schur_jacobi_trudi(complement(term.strip, n), ctx));
    }
  }
  return series;
}

LaurentPolynomial polychronakos_partition(int N, RingContext ctx) {
  return rogers_szego(N, ctx).q_inverted().q_shifted(static_cast<int>(polychronakos_ground_shift(N, ctx.rank)));
}

LaurentPolynomial sp_N_sum(int N, RingContext ctx) {
  require_rank(ctx);
  StripSchurCache s(ctx);
  LaurentPolynomial sum(ctx);
  for (const auto& h : enumerate_Sp_N(N, ctx.rank)) {
    sum += QCoefficient::monomial(energy(h)) * s(kappa(h));
  }
  return sum;
}

KostkaResult kostka_foulkes(const Partition& lambda, int n) {
  if (n <= 0) n = std::max(lambda.length(), 1);
  KostkaResult result;
  result.lambda = lambda;
  const int N = lambda.size();
  if (N == 0) {
    result.polynomial = QCoefficient(1);
    result.strips.push_back({BorderStrip{}, 0, 1});
    return result;
  }
  for_each_composition(N, n, [&](const std::vector<int>& m) {
    BorderStrip bs(m);
    Integer c = count_LR(bs, lambda);
    if (c == 0) return;
    int t = t_statistic(bs);
    result.polynomial.add_term(t, c);
    result.strips.push_back({bs, t, c});
  });
  return result;
}

QCoefficient kostka_oracle(const Partition& lambda) {
  const int N = lambda.size();
  const int n = std::max(lambda.length(), 1);
  auto rhs = [N](const Partition& nu) {
    int shift = 0;
    for (int v : nu.parts()) shift += v * (v - 1) / 2;
    return gaussian_multinomial(N, nu.parts()).shifted(shift);
  };
  // Partitions dominating lambda come first in lexicographic order.
  std::vector<std::pair<Partition, QCoefficient>> found;
  for (const Partition& rho : partitions_of(N, n)) {
    QCoefficient k = rhs(rho);
    for (const auto& [sigma, ks] : found) {
      Integer multiplicity = kostka_number(SkewDiagram(sigma), rho.parts());
      if (multiplicity != 0) k -= ks * QCoefficient(multiplicity);
    }
    if (rho == lambda) return k;
    found.emplace_back(rho, std::move(k));
  }
  throw DomainError("partition " + to_string(lambda) + " not reached");
}

QSeries branching_function(int n, int k, const Partition& lambda, int order) {
  if (lambda.length() >= n) throw DomainError("branching functions need l(lambda) < n");
  if (lambda.size() % n != k) throw DomainError("|lambda| must be congruent to k mod n");
  RingContext ctx{n, true};
  QSeries series(ctx, delta(n, k), order);
  for (const auto& term : level1_strips(n, k, order)) {
    int size = term.strip.size();
    if (size < lambda.size()) continue;
    int j = (size - lambda.size()) / n;
    std::vector<int> padded(static_cast<std::size_t>(n), j);
    for (int i = 0; i < lambda.length(); ++i) padded[static_cast<std::size_t>(i)] += lambda.part(i);
    Integer c = count_LR(term.strip, Partition(padded));
    if (c != 0) series.add_to(term.exponent, LaurentPolynomial::constant(ctx, QCoefficient(c)));
  }
  return series;
}

std::vector<Partition> branching_labels(int n, int k, int order) {
  int largest = 0;
  for (const auto& term : level1_strips(n, k, order)) largest = std::max(largest, term.strip.size());
  std::vector<Partition> out;
  for (int size = k; size <= largest; size += n) {
    for (const auto& p : partitions_of(size, n - 1)) out.push_back(p);
  }
  return out;
}

}  // namespace skewpath
