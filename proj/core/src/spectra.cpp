#include "skewpath/spectra.hpp"

#include <numeric>

#include "skewpath/errors.hpp"

namespace skewpath {

int local_energy(int a, int b) { return a < b ? 0 : 1; }

namespace {

void check_letters(int n, const std::vector<int>& prefix) {
  if (n < 1) throw DomainError("rank must be positive");
  for (int a : prefix) {
    if (a < 1 || a > n) throw DomainError("letter " + std::to_string(a) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

SpinConfiguration::SpinConfiguration(int n, std::vector<int> prefix)
    : n_(n), prefix_(std::move(prefix)), sector_(0) {
  check_letters(n_, prefix_);
  sector_ = static_cast<int>(prefix_.size() % static_cast<std::size_t>(n_));
}

SpinConfiguration::SpinConfiguration(int n, std::vector<int> prefix, int sector)
    : SpinConfiguration(n, std::move(prefix)) {
  if (sector != sector_) {
    throw DomainError("prefix of length " + std::to_string(prefix_.size()) + " is not in sector " +
                      std::to_string(sector));
  }
}

SpinConfiguration SpinConfiguration::ground_state(int n, int k) {
  if (k < 0 || k >= n) throw DomainError("sector must lie in 0..n-1");
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  return SpinConfiguration(n, std::move(p));
}

int SpinConfiguration::letter(int i) const {
  if (i < 1) throw DomainError("positions start at 1");
  auto m = static_cast<int>(prefix_.size());
  if (i <= m) return prefix_[static_cast<std::size_t>(i - 1)];
  return (i - m - 1) % n_ + 1;
}

SpinConfiguration SpinConfiguration::canonical() const {
  std::vector<int> p = prefix_;
  auto period_at_end = [this, &p] {
    if (p.size() < static_cast<std::size_t>(n_)) return false;
    for (int j = 0; j < n_; ++j) {
      if (p[p.size() - static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] != j + 1) return false;
    }
    return true;
  };
  while (period_at_end()) p.resize(p.size() - static_cast<std::size_t>(n_));
  return SpinConfiguration(n_, std::move(p));
}

bool operator==(const SpinConfiguration& a, const SpinConfiguration& b) {
  if (a.n_ != b.n_) return false;
  return a.canonical().prefix_ == b.canonical().prefix_;
}

SpectrumPoint::SpectrumPoint(int n, std::vector<int> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1) throw DomainError("rank must be positive");
  for (int m : blocks_) {
    if (m < 1 || m > n_) {
      throw DomainError("block " + std::to_string(m) + " outside 1.." + std::to_string(n_));
    }
  }
}

int SpectrumPoint::size() const noexcept { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

SpectrumPoint SpectrumPoint::normalized() const {
  std::vector<int> b = blocks_;
  while (!b.empty() && b.back() == n_) b.pop_back();
  return SpectrumPoint(n_, std::move(b));
}

int SpectrumPoint::h(int i) const {
  if (i < 1) throw DomainError("positions start at 1");
  int end = 0;
  for (int m : blocks_) {
    end += m;
    if (i <= end) return i == end ? 1 : 0;
  }
  return (i - end) % n_ == 0 ? 1 : 0;
}

SpectrumPoint prefix_blocks(int n, const std::vector<int>& prefix) {
  check_letters(n, prefix);
  std::vector<int> blocks;
  int run = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    int next = i + 1 < prefix.size() ? prefix[i + 1] : 1;
    ++run;
    if (local_energy(prefix[i], next) == 1) {
      blocks.push_back(run);
      run = 0;
    }
  }
  return SpectrumPoint(n, std::move(blocks));
}

SpectrumPoint h_map(const SpinConfiguration& s) { return prefix_blocks(s.n(), s.prefix()).normalized(); }

namespace {

int energy_of(int n, const std::function<int(int)>& h, int length, int sector) {
  SpectrumPoint ground(n, sector == 0 ? std::vector<int>{} : std::vector<int>{sector});
  int e = 0;
  for (int i = 1; i <= length + n; ++i) e += i * (h(i) - ground.h(i));
  return e;
}

}  // namespace

int energy(const SpinConfiguration& s) {
  auto h = [&s](int i) { return local_energy(s.letter(i), s.letter(i + 1)); };
  return energy_of(s.n(), h, static_cast<int>(s.prefix().size()), s.sector());
}

int energy(const SpectrumPoint& h) {
  return energy_of(h.n(), [&h](int i) { return h.h(i); }, h.size(), h.sector());
}

ExponentVector weight(const SpinConfiguration& s) {
  std::vector<int> d(static_cast<std::size_t>(s.n()), 0);
  SpinConfiguration c = s.canonical();
  for (int a : c.prefix()) d[static_cast<std::size_t>(a - 1)] += 2;
  return ExponentVector(std::move(d));
}

BorderStrip kappa(const SpectrumPoint& h) { return BorderStrip(h.blocks()); }

namespace {

// Cells of a shape in reading order: rows from the top, right to left.
std::vector<Cell> reading_cells(const SkewDiagram& shape) {
  std::vector<Cell> out;
  for (int i = 0; i < shape.outer().length(); ++i) {
    for (int j = shape.outer().part(i) - 1; j >= shape.inner().part(i); --j) out.push_back({i, j});
  }
  return out;
}

}  // namespace

SpinConfiguration phi(const Tableau& t, const SpectrumPoint& h) {
  if (!(t.shape() == realize_border_strip(kappa(h)))) {
    throw DomainError("tableau shape " + to_string(t.shape()) + " is not kappa(h) = " + to_string(kappa(h)));
  }
  return SpinConfiguration(h.n(), t.reading_word());
}

Tableau phi_inverse(const SpinConfiguration& s) {
  SpinConfiguration c = s.canonical();
  SpectrumPoint h = h_map(c);
  SkewDiagram shape = realize_border_strip(kappa(h));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
  for (int i = 0; i < shape.outer().length(); ++i) {
    rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(shape.outer().part(i) - shape.inner().part(i)));
  }
  auto cells = reading_cells(shape);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    Cell cell = cells[k];
    rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col - shape.inner().part(cell.row))] =
        c.prefix()[k];
  }
  return Tableau(std::move(shape), Alphabet::standard(s.n()), std::move(rows));
}

void for_each_fiber(const SpectrumPoint& h, const std::function<bool(const SpinConfiguration&)>& visit) {
  const int n = h.n();
  const int m = h.size();
  std::vector<int> prefix(static_cast<std::size_t>(m));
  // Choose a_1, a_2, ... so that H(a_i, a_{i+1}) = h_i; H(a_m, 1) = 1 always.
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return visit(SpinConfiguration(n, prefix));
    for (int a = 1; a <= n; ++a) {
      if (i > 0 && local_energy(prefix[static_cast<std::size_t>(i - 1)], a) != h.h(i)) continue;
      prefix[static_cast<std::size_t>(i)] = a;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
}

std::vector<SpinConfiguration> enumerate_fiber(const SpectrumPoint& h) {
  std::vector<SpinConfiguration> out;
  for_each_fiber(h, [&out](const SpinConfiguration& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

LaurentPolynomial chi_fiber(const SpectrumPoint& h) {
  LaurentPolynomial chi(RingContext{h.n(), true});
  for_each_fiber(h, [&chi](const SpinConfiguration& s) {
    chi.add_term(weight(s), 1);
    return true;
  });
  return chi;
}

std::vector<SpectrumPoint> enumerate_Sp_N(int N, int n) {
  if (N < 0 || n < 1) throw DomainError("need N >= 0 and n >= 1");
  std::vector<SpectrumPoint> out;
  std::vector<int> blocks;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    for (int m = 1; m <= std::min(n, remaining); ++m) {
      blocks.push_back(m);
      self(self, remaining - m);
      blocks.pop_back();
    }
  };
  rec(rec, N);
  return out;
}

std::vector<std::vector<int>> enumerate_motifs(int N, int n) {
  if (N < 1 || n < 1) throw DomainError("need N >= 1 and n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> d;
  auto rec = [&](auto&& self, int run) -> void {
    if (static_cast<int>(d.size()) == N - 1) {
      out.push_back(d);
      return;
    }
    d.push_back(0);
    self(self, 0);
    d.back() = 1;
    if (run + 1 <= n - 1) self(self, run + 1);
    d.pop_back();
  };
  rec(rec, 0);
  return out;
}

SpectrumPoint motif_to_spectrum(const std::vector<int>& d, int n) {
  std::vector<int> blocks;
  int run = 0;
  for (int v : d) {
    if (v != 0 && v != 1) throw DomainError("motif entries must be 0 or 1");
    ++run;
    if (v == 0) {
      blocks.push_back(run);
      run = 0;
    } else if (run >= n) {
      throw DomainError("motif has a run of " + std::to_string(n) + " ones");
    }
  }
  blocks.push_back(run + 1);
  return SpectrumPoint(n, std::move(blocks));
}

std::vector<int> spectrum_to_motif(const SpectrumPoint& h) {
  std::vector<int> d;
  for (int i = 1; i < h.size(); ++i) d.push_back(1 - h.h(i));
  return d;
}

long long hs_eigenvalue(const std::vector<int>& d) {
  const auto N = static_cast<long long>(d.size()) + 1;
  long long e = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    long long id = static_cast<long long>(k + 1) * d[k];
    e += id * (id - N);
  }
  return e;
}

long long polychronakos_ground_shift(int N, int n) {
  if (N < 0 || n < 1) throw DomainError("need N >= 0 and n >= 1");
  const long long nb = N % n;
  const long long num = static_cast<long long>(n - 1) * N * N - nb * (n - nb);
  if (num % (2LL * n) != 0) throw ConsistencyError("E_N is not an integer");
  return num / (2LL * n);
}

long long polychronakos_energy(const std::vector<int>& d, int n) {
  long long s = 0;
  for (std::size_t k = 0; k < d.size(); ++k) s += static_cast<long long>(k + 1) * d[k];
  return -s + polychronakos_ground_shift(static_cast<int>(d.size()) + 1, n);
}

LaurentPolynomial z_vertex(int N, int n) {
  if (N < 0 || n < 1) throw DomainError("need N >= 0 and n >= 1");
  RingContext ctx{n, false};
  LaurentPolynomial z(ctx);
  std::vector<int> prefix(static_cast<std::size_t>(N), 1);
  // Odometer over [n]^N.
  while (true) {
    SpinConfiguration s(n, prefix);
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int a : prefix) d[static_cast<std::size_t>(a - 1)] += 2;
    z.add_term(ExponentVector(std::move(d)), QCoefficient::monomial(energy(s)));
    int pos = N - 1;
    while (pos >= 0 && prefix[static_cast<std::size_t>(pos)] == n) {
      prefix[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++prefix[static_cast<std::size_t>(pos)];
  }
  return z;
}

}  // namespace skewpath
