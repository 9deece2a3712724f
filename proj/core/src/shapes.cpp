#include "skewpath/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "skewpath/errors.hpp"

namespace skewpath {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

SkewDiagram::SkewDiagram(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw DomainError("inner partition " + to_string(inner_) + " is not contained in " + to_string(outer_));
  }
}

bool SkewDiagram::contains(Cell c) const noexcept {
  return c.row >= 0 && c.col >= inner_.part(c.row) && c.col < outer_.part(c.row);
}

std::vector<Cell> SkewDiagram::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < outer_.length(); ++i) {
    for (int j = inner_.part(i); j < outer_.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<int> SkewDiagram::column_lengths() const {
  Partition lc = outer_.conjugate();
  Partition mc = inner_.conjugate();
  std::vector<int> out(static_cast<std::size_t>(outer_.part(0)));
  for (int j = 0; j < outer_.part(0); ++j) out[static_cast<std::size_t>(j)] = lc.part(j) - mc.part(j);
  return out;
}

BorderStrip::BorderStrip(std::vector<int> columns) : columns_(std::move(columns)) {
  for (int m : columns_) {
    if (m <= 0) throw DomainError("border strip column lengths must be positive");
  }
}

int BorderStrip::size() const noexcept { return std::accumulate(columns_.begin(), columns_.end(), 0); }

SkewDiagram realize_border_strip(const BorderStrip& bs) {
  const int r = bs.r();
  std::vector<int> prefix(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 1; i <= r; ++i) prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + bs.m(i);
  std::vector<int> lc(static_cast<std::size_t>(r));
  std::vector<int> mc(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    lc[static_cast<std::size_t>(i - 1)] = prefix[static_cast<std::size_t>(r + 1 - i)] - r + i;
    mc[static_cast<std::size_t>(i - 1)] = prefix[static_cast<std::size_t>(r - i)] - r + i;
  }
  return SkewDiagram(Partition(lc).conjugate(), Partition(mc).conjugate());
}

bool is_rank(const SkewDiagram& sd, int n) {
  auto cols = sd.column_lengths();
  return std::all_of(cols.begin(), cols.end(), [n](int c) { return c <= n; });
}

bool is_connected(const SkewDiagram& sd) {
  auto cells = sd.cells();
  if (cells.empty()) return true;
  std::set<Cell> seen{cells.front()};
  std::vector<Cell> stack{cells.front()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
      if (sd.contains(d) && seen.insert(d).second) stack.push_back(d);
    }
  }
  return seen.size() == cells.size();
}

bool is_border_strip(const SkewDiagram& sd) {
  if (!is_connected(sd)) return false;
  for (Cell c : sd.cells()) {
    if (sd.contains({c.row + 1, c.col}) && sd.contains({c.row, c.col + 1}) &&
        sd.contains({c.row + 1, c.col + 1})) {
      return false;
    }
  }
  return true;
}

std::optional<BorderStrip> recognize_border_strip(const SkewDiagram& sd) {
  if (!is_border_strip(sd)) return std::nullopt;
  auto cols = sd.column_lengths();
  std::vector<int> m;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    if (*it > 0) m.push_back(*it);
  }
  return BorderStrip(std::move(m));
}

SkewDiagram complement(const SkewDiagram& sd, int n) {
  if (n < 1) throw DomainError("rank must be positive");
  if (!is_rank(sd, n)) throw DomainError("diagram " + to_string(sd) + " has a column longer than " + std::to_string(n));
  std::vector<int> tilde(static_cast<std::size_t>(n), sd.outer().part(0));
  for (int p : sd.inner().parts()) tilde.push_back(p);
  return SkewDiagram(Partition(std::move(tilde)), sd.outer());
}

SkewDiagram complement(const BorderStrip& bs, int n) { return complement(realize_border_strip(bs), n); }

int t_statistic(const BorderStrip& bs) {
  int t = 0;
  for (int i = 1; i < bs.r(); ++i) t += (bs.r() - i) * bs.m(i);
  return t;
}

std::map<int, std::vector<DrinfeldRoot>> drinfeld_polynomials(const SkewDiagram& sd, int n) {
  std::map<int, std::vector<DrinfeldRoot>> out;
  for (int i = 1; i < n; ++i) out[i];
  Partition lc = sd.outer().conjugate();
  Partition mc = sd.inner().conjugate();
  for (int j = 1; j <= sd.outer().part(0); ++j) {
    int l = lc.part(j - 1);
    int m = mc.part(j - 1);
    auto it = out.find(l - m);
    if (it == out.end()) continue;
    Rational c = -(Rational(l + m, 2) - j + Rational(1, 2));
    it->second.push_back({c, -1});
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("expected an integer in '" + std::string(whole) + "'", std::string(piece));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Partition& p) { return p.empty() ? "0" : join(p.parts()); }

std::string to_string(const SkewDiagram& sd) {
  return to_string(sd.outer()) + "/" + to_string(sd.inner());
}

std::string to_string(const BorderStrip& bs) { return "<" + join(bs.columns()) + ">"; }

std::string to_string(const DrinfeldRoot& root) {
  std::string s;
  if (root.constant != Rational(0)) s = to_string(root.constant);
  if (root.b_coefficient != 0) {
    std::string b = root.b_coefficient == 1 ? "b" : root.b_coefficient == -1 ? "-b" : std::to_string(root.b_coefficient) + "b";
    if (s.empty()) {
      s = b;
    } else {
      s += (b.front() == '-') ? b : "+" + b;
    }
  }
  return s.empty() ? "0" : s;
}

std::vector<int> parse_int_list(std::string_view text) { return parse_ints(text, text); }

Partition parse_partition(std::string_view text) {
  auto parts = parse_ints(text, text);
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), std::string(text));
  }
}

SkewDiagram parse_skew_diagram(std::string_view text) {
  auto slash = text.find('/');
  Partition outer = parse_partition(text.substr(0, slash));
  Partition inner = slash == std::string_view::npos ? Partition{} : parse_partition(text.substr(slash + 1));
  if (!outer.contains(inner)) throw ParseError("inner partition is not contained in the outer one", std::string(text));
  return SkewDiagram(std::move(outer), std::move(inner));
}

BorderStrip parse_border_strip(std::string_view text) {
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw ParseError("border strip must look like <m1,...,mr>", std::string(text));
  }
  auto cols = parse_ints(text.substr(1, text.size() - 2), text);
  for (int m : cols) {
    if (m <= 0) throw ParseError("border strip column lengths must be positive", std::to_string(m));
  }
  return BorderStrip(std::move(cols));
}

}  // namespace skewpath
