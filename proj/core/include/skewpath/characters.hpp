#pragma once

// Generating functions assembled from skew Schur functions: Rogers-Szego
// polynomials, level-1 affine sl_n characters, Kostka-Foulkes polynomials
// and branching functions.

#include <map>
#include <vector>

#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"

namespace skewpath {

// H_N = sum over k_1+...+k_n = N of (q)_N / prod (q)_{k_i} x^k.
LaurentPolynomial rogers_szego(int N, RingContext ctx);
// H_N = sum_{i=1}^n (-1)^{i+1} (q)_{N-1}/(q)_{N-i} e_i H_{N-i}, H_0 = 1.
LaurentPolynomial rogers_szego_recursive(int N, RingContext ctx);
// sum over 1 <= m_i <= n, sum m_i = N of q^{N(N+1)/2 - sum_i (m_1+...+m_i)} s_<m>.
LaurentPolynomial F_N(int N, RingContext ctx);

// sum over ordered partitions (k_1..k_j) of m, parts at most max_part when
// max_part > 0, of (-1)^{j+1} q^{N(m-j) - m(m+1)/2 + sum_i i k_i}.
QCoefficient A_direct(int N, int m, int max_part = 0);
// (-1)^{m+1} (q)_{N-1} / (q)_{N-m}
QCoefficient A_closed(int N, int m);
// The two halves of A_direct(N, m) over ordered partitions ending in a part
// 1 appended to a partition of m-1, and those whose last part was raised by one.
std::pair<QCoefficient, QCoefficient> A_split(int N, int m);

// Delta_k = k(n-k)/2n
Rational delta(int n, int k);

// (1/(q)_inf^{n-1}) sum over a in Z^n, sum a = k of
// q^{(sum a_i^2 - k)/2} x^a, at offset Delta_k, relation mode.
QSeries level1_theta(int n, int k, int order);

struct StripTerm {
  BorderStrip strip;
  int exponent = 0;  // measured from Delta_k
};
// Strips with parts in 1..n, last part below n, |kappa| = k mod n, whose
// exponent |kappa|(n-|kappa|)/2n + t(kappa) - Delta_k is at most `order`.
std::vector<StripTerm> level1_strips(int n, int k, int order);

enum class DecompositionVariant { A, B };
// Variant A: sum of q^{...} s_kappa over level1_strips(n, k, order).
// Variant B: sum over level1_strips(n, (n-k) mod n, order) of q^{...} s_{kappa^c}.
QSeries level1_decomposition(int n, int k, int order, DecompositionVariant variant);

// q^{E_N} H_N(q^{-1}, x)
LaurentPolynomial polychronakos_partition(int N, RingContext ctx);
// sum over Sp_N of q^{energy(h)} s_<m_1..m_r> (strip of size exactly N).
LaurentPolynomial sp_N_sum(int N, RingContext ctx);

struct KostkaTerm {
  BorderStrip strip;
  int t = 0;
  Integer lr = 0;
};

struct KostkaResult {
  Partition lambda;
  QCoefficient polynomial;
  std::vector<KostkaTerm> strips;
};

// sum over strips kappa of rank n with |kappa| = |lambda| of q^{t(kappa)} C(kappa, lambda).
// n = 0 means n = max(l(lambda), 1).
KostkaResult kostka_foulkes(const Partition& lambda, int n = 0);
// Triangular extraction from
// sum_lambda K_lambda s_lambda = sum_k q^{sum k_i(k_i-1)/2} (q)_N / prod (q)_{k_i} x^k.
QCoefficient kostka_oracle(const Partition& lambda);

// sum over level-1 strips kappa with |kappa| >= |lambda| of
// q^{exponent} C(kappa, lambda + (j^n)), j = (|kappa| - |lambda|)/n, as a
// series of constants in the relation-mode ring of rank n.
QSeries branching_function(int n, int k, const Partition& lambda, int order);
// Partitions lambda with l(lambda) < n, |lambda| = k mod n that can occur
// up to the given order.
std::vector<Partition> branching_labels(int n, int k, int order);

}  // namespace skewpath
