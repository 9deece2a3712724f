#pragma once

// Spin configurations of the level-1 sl_n vertex model, the local energy map
// to block lists [m_1,...,m_r], and the correspondence with tableaux.

#include <functional>
#include <vector>

#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"
#include "skewpath/tableaux.hpp"

namespace skewpath {

// H(a,b): 0 if a < b, 1 otherwise.
int local_energy(int a, int b);

// (a_1, ..., a_m, (1, 2, ..., n)^infinity); the sector is m mod n.
class SpinConfiguration {
 public:
  SpinConfiguration(int n, std::vector<int> prefix);
  // Throws DomainError unless sector == prefix.size() mod n.
  SpinConfiguration(int n, std::vector<int> prefix, int sector);
  // (1, ..., k, (1, ..., n)^infinity)
  static SpinConfiguration ground_state(int n, int k);

  int n() const noexcept { return n_; }
  const std::vector<int>& prefix() const noexcept { return prefix_; }
  int sector() const noexcept { return sector_; }
  // s_i for i >= 1.
  int letter(int i) const;
  // Drops trailing copies of (1, ..., n) from the prefix.
  SpinConfiguration canonical() const;

  // Same infinite sequence.
  friend bool operator==(const SpinConfiguration& a, const SpinConfiguration& b);

 private:
  int n_;
  std::vector<int> prefix_;
  int sector_;
};

// h = (0^{m_1-1} 1, ..., 0^{m_r-1} 1, (0^{n-1} 1)^infinity).
class SpectrumPoint {
 public:
  // Throws DomainError unless 1 <= m_i <= n. A final block equal to n is
  // allowed here (the finite convention); see normalized().
  SpectrumPoint(int n, std::vector<int> blocks);

  int n() const noexcept { return n_; }
  const std::vector<int>& blocks() const noexcept { return blocks_; }
  int size() const noexcept;
  int sector() const noexcept { return size() % n_; }
  bool is_normal() const noexcept { return blocks_.empty() || blocks_.back() != n_; }
  // Trailing blocks equal to n removed.
  SpectrumPoint normalized() const;
  // h_i for i >= 1.
  int h(int i) const;

  bool operator==(const SpectrumPoint&) const = default;

 private:
  int n_;
  std::vector<int> blocks_;
};

// Blocks of h_1..h_m for the prefix followed by the periodic tail (literal,
// trailing n-blocks kept).
SpectrumPoint prefix_blocks(int n, const std::vector<int>& prefix);
// Normal form of the local energy sequence.
SpectrumPoint h_map(const SpinConfiguration& s);

// sum_i i (h_i - h^{(k)}_i) over the sequence of s, k its sector.
int energy(const SpinConfiguration& s);
// sum of eps_{a_i} over the canonical prefix.
ExponentVector weight(const SpinConfiguration& s);
// sum_i i (h_i - h^{(k)}_i) for the spectrum point itself.
int energy(const SpectrumPoint& h);

// The strip <m_1, ..., m_r> with the block list of h, taken literally.
BorderStrip kappa(const SpectrumPoint& h);

// Reads the tableau along the strip; throws DomainError when its shape is
// not the realized kappa(h).
SpinConfiguration phi(const Tableau& t, const SpectrumPoint& h);
// Tableau of shape kappa(h_map(s)) holding the canonical prefix.
Tableau phi_inverse(const SpinConfiguration& s);

// Configurations whose prefix of length |h| reproduces the block list of h,
// found letter by letter from the local energy rule alone.
void for_each_fiber(const SpectrumPoint& h, const std::function<bool(const SpinConfiguration&)>& visit);
std::vector<SpinConfiguration> enumerate_fiber(const SpectrumPoint& h);
// Sum of weight(s) over the fiber of h, relation mode.
LaurentPolynomial chi_fiber(const SpectrumPoint& h);

// Block lists with sum N and parts in 1..n (last part n allowed), in
// lexicographic order.
std::vector<SpectrumPoint> enumerate_Sp_N(int N, int n);
// Binary motifs of length N-1 with no run of n ones.
std::vector<std::vector<int>> enumerate_motifs(int N, int n);
// h_d = (1-d_1, ..., 1-d_{N-1}, 1, tail); throws DomainError for invalid motifs.
SpectrumPoint motif_to_spectrum(const std::vector<int>& d, int n);
std::vector<int> spectrum_to_motif(const SpectrumPoint& h);

// sum_i i d_i (i d_i - N), N = d.size() + 1.
long long hs_eigenvalue(const std::vector<int>& d);
// E_N = (n-1) N^2 / 2n - Nbar (n - Nbar) / 2n (always an integer).
long long polychronakos_ground_shift(int N, int n);
// -sum_i i d_i + E_N
long long polychronakos_energy(const std::vector<int>& d, int n);

// sum over all prefixes in [n]^N of q^{E(s)} x^{wt}, weights of the full
// length-N prefix, relation off.
LaurentPolynomial z_vertex(int N, int n);

}  // namespace skewpath
