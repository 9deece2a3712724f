#pragma once

// Skew Schur functions s_{lambda/mu}(x_1, ..., x_n) computed from tableaux,
// from the Jacobi-Trudi determinant in elementary symmetric polynomials, and
// from the column list of a border strip.

#include <map>
#include <vector>

#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"

namespace skewpath {

enum class SchurMethod { Enumerative, JacobiTrudi, BorderStrip };

// e_0, ..., e_n of one ring, with e_m = 0 outside that range.
class ElementaryTable {
 public:
  explicit ElementaryTable(RingContext ctx);
  const RingContext& context() const noexcept { return ctx_; }
  const LaurentPolynomial& operator()(int m) const;

 private:
  RingContext ctx_;
  std::vector<LaurentPolynomial> e_;
  LaurentPolynomial zero_;
};

// Sum over semi-standard tableaux of their weight monomials.
LaurentPolynomial schur_enumerative(const SkewDiagram& shape, RingContext ctx);
// det(e_{lambda'_i - mu'_j - i + j}) of size max(lambda_1, 1).
LaurentPolynomial schur_jacobi_trudi(const SkewDiagram& shape, RingContext ctx);
// The r x r Hessenberg determinant with first row e_{m_r}, e_{m_r+m_{r-1}}, ...
// and ones on the subdiagonal; the empty strip gives 1.
LaurentPolynomial schur_border_strip_det(const BorderStrip& bs, RingContext ctx);
// First-row expansion of the same determinant:
// s_<m_1..m_r> = sum_i (-1)^{i+1} e_{m_r+...+m_{r-i+1}} s_<m_1..m_{r-i}>.
LaurentPolynomial schur_border_strip_recursive(const BorderStrip& bs, RingContext ctx);
// Dispatch; BorderStrip requires shape to be a border strip (ShapeError).
LaurentPolynomial schur(const SkewDiagram& shape, RingContext ctx, SchurMethod method);

// Memoized s_<m_1..m_k> for all prefixes met so far, in one ring.
class StripSchurCache {
 public:
  explicit StripSchurCache(RingContext ctx) : e_(ctx) {}
  const RingContext& context() const noexcept { return e_.context(); }
  const LaurentPolynomial& operator()(const BorderStrip& bs);

 private:
  ElementaryTable e_;
  std::map<std::vector<int>, LaurentPolynomial> memo_;
};

// s*_{lambda/mu} = det(e_{n - lambda'_i + mu'_j + i - j}), relation mode.
LaurentPolynomial schur_conjugate_det(const SkewDiagram& shape, int n);
// sum over SST of x^{-wt(T)}, relation mode.
LaurentPolynomial schur_conjugate_sum(const SkewDiagram& shape, int n);

// Coefficients of s_nu (l(nu) <= n) in s_{lambda/mu}(x_1..x_n).
std::map<Partition, Integer> lr_expand(const SkewDiagram& shape, int n);
// Triangular extraction: K_{lambda/mu,nu} minus contributions of
// lexicographically larger partitions.
std::map<Partition, Integer> lr_expand_by_extraction(const SkewDiagram& shape, int n);
// Lattice-word counting on a border strip.
std::map<Partition, Integer> lr_expand_by_counting(const BorderStrip& bs, int n);

// All partitions of `total` with at most max_length parts (and parts at most
// max_part when max_part >= 0), in lexicographically decreasing order.
std::vector<Partition> partitions_of(int total, int max_length, int max_part = -1);

}  // namespace skewpath
