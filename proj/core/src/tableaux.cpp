#include "skewpath/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "skewpath/errors.hpp"

namespace skewpath {

std::vector<int> Alphabet::letters() const {
  std::vector<int> out;
  for (int a = 1; a <= n; ++a) out.push_back(a);
  if (kind == AlphabetKind::SignedB) {
    out.push_back(0);
    for (int a = -n; a <= -1; ++a) out.push_back(a);
  }
  return out;
}

int Alphabet::rank(int letter) const {
  if (letter >= 1 && letter <= n) return letter;
  if (kind == AlphabetKind::SignedB) {
    if (letter == 0) return n + 1;
    if (letter < 0 && letter >= -n) return 2 * n + 2 + letter;
  }
  throw DomainError("letter " + std::to_string(letter) + " is not in the alphabet");
}

namespace {

// Vertical rule: `above` sits directly over `below`.
bool vertical_ok(const Alphabet& a, int above, int below) {
  if (a.kind == AlphabetKind::SignedB && above == 0 && below == 0) return true;
  return a.rank(above) < a.rank(below);
}

// Horizontal rule: `left` sits directly left of `right`.
bool horizontal_ok(const Alphabet& a, int left, int right) {
  if (a.kind == AlphabetKind::SignedB && left == 0 && right == 0) return false;
  return a.rank(left) <= a.rank(right);
}

constexpr int kEmpty = INT_MIN;

class Filler {
 public:
  Filler(const SkewDiagram& shape, Alphabet alphabet, const TableauVisitor& visit)
      : shape_(shape), alphabet_(alphabet), letters_(alphabet.letters()), visit_(visit) {
    const auto cols = shape.column_lengths();
    for (int j = static_cast<int>(cols.size()) - 1; j >= 0; --j) {
      for (int i = 0; i < shape.outer().length(); ++i) {
        if (shape.contains({i, j})) order_.push_back({i, j});
      }
    }
    grid_.resize(static_cast<std::size_t>(shape.outer().length()));
    for (int i = 0; i < shape.outer().length(); ++i) {
      grid_[static_cast<std::size_t>(i)].assign(
          static_cast<std::size_t>(shape.outer().part(i) - shape.inner().part(i)), kEmpty);
    }
  }

  void set_content(std::vector<int> content, bool lattice) {
    content_ = std::move(content);
    counts_.assign(content_.size(), 0);
    lattice_ = lattice;
  }

  void freeze(Cell c, int letter) {
    frozen_.insert(c);
    at(c) = letter;
  }

  void run() { (void)step(0); }

 private:
  int& at(Cell c) {
    return grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape_.inner().part(c.row))];
  }

  bool fits(Cell c, int letter) {
    Cell up{c.row - 1, c.col};
    if (shape_.contains(up) && !vertical_ok(alphabet_, at(up), letter)) return false;
    Cell right{c.row, c.col + 1};
    if (shape_.contains(right) && !horizontal_ok(alphabet_, letter, at(right))) return false;
    if (!content_.empty()) {
      if (letter < 1 || letter > static_cast<int>(content_.size())) return false;
      auto a = static_cast<std::size_t>(letter - 1);
      if (counts_[a] >= content_[a]) return false;
      if (lattice_ && a > 0 && counts_[a - 1] < counts_[a] + 1) return false;
    }
    return true;
  }

  void count(int letter, int delta) {
    if (!content_.empty()) counts_[static_cast<std::size_t>(letter - 1)] += delta;
  }

  bool step(std::size_t idx) {
    if (idx == order_.size()) {
      return visit_(Tableau(shape_, alphabet_, grid_, frozen_));
    }
    const Cell c = order_[idx];
    if (frozen_.count(c) != 0) {
      int letter = at(c);
      if (!fits(c, letter)) return true;
      count(letter, 1);
      bool go_on = step(idx + 1);
      count(letter, -1);
      return go_on;
    }
    for (int letter : letters_) {
      if (!fits(c, letter)) continue;
      at(c) = letter;
      count(letter, 1);
      bool go_on = step(idx + 1);
      count(letter, -1);
      at(c) = kEmpty;
      if (!go_on) return false;
    }
    return true;
  }

  const SkewDiagram& shape_;
  Alphabet alphabet_;
  std::vector<int> letters_;
  const TableauVisitor& visit_;
  std::vector<Cell> order_;
  std::vector<std::vector<int>> grid_;
  std::set<Cell> frozen_;
  std::vector<int> content_;
  std::vector<int> counts_;
  bool lattice_ = false;
};

std::vector<Tableau> collect(const std::function<void(const TableauVisitor&)>& producer) {
  std::vector<Tableau> out;
  producer([&out](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

Tableau::Tableau(SkewDiagram shape, Alphabet alphabet, std::vector<std::vector<int>> rows, std::set<Cell> frozen)
    : shape_(std::move(shape)), alphabet_(alphabet), rows_(std::move(rows)), frozen_(std::move(frozen)) {
  if (static_cast<int>(rows_.size()) != shape_.outer().length()) {
    throw ShapeError("tableau has " + std::to_string(rows_.size()) + " rows, shape has " +
                     std::to_string(shape_.outer().length()));
  }
  for (int i = 0; i < shape_.outer().length(); ++i) {
    int width = shape_.outer().part(i) - shape_.inner().part(i);
    if (static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) != width) {
      throw ShapeError("tableau row " + std::to_string(i + 1) + " has the wrong length");
    }
  }
  for (Cell c : frozen_) {
    if (!shape_.contains(c)) throw ShapeError("frozen cell outside the shape");
  }
}

int Tableau::entry(Cell c) const {
  if (!shape_.contains(c)) throw ShapeError("cell outside the shape");
  return rows_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape_.inner().part(c.row))];
}

bool Tableau::is_valid() const {
  try {
    for (Cell c : shape_.cells()) {
      int v = entry(c);
      (void)alphabet_.rank(v);
      Cell below{c.row + 1, c.col};
      if (shape_.contains(below) && !vertical_ok(alphabet_, v, entry(below))) return false;
      Cell right{c.row, c.col + 1};
      if (shape_.contains(right) && !horizontal_ok(alphabet_, v, entry(right))) return false;
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

ExponentVector Tableau::weight() const {
  std::vector<int> d(static_cast<std::size_t>(alphabet_.n), 0);
  for (Cell c : shape_.cells()) {
    int v = entry(c);
    if (v == 0) continue;
    int unit = frozen_.count(c) != 0 ? 1 : 2;
    auto idx = static_cast<std::size_t>(std::abs(v) - 1);
    if (idx >= d.size()) throw DomainError("letter outside the alphabet");
    d[idx] += v > 0 ? unit : -unit;
  }
  return ExponentVector(std::move(d));
}

std::vector<int> Tableau::content() const {
  if (alphabet_.kind != AlphabetKind::Standard) throw DomainError("content is defined for the standard alphabet");
  std::vector<int> out(static_cast<std::size_t>(alphabet_.n), 0);
  for (const auto& row : rows_) {
    for (int v : row) ++out.at(static_cast<std::size_t>(v - 1));
  }
  return out;
}

void for_each_sst(const SkewDiagram& shape, int n, const TableauVisitor& visit) {
  if (n < 0) throw DomainError("alphabet size must be nonnegative");
  if (!is_rank(shape, n)) return;
  Filler(shape, Alphabet::standard(n), visit).run();
}

std::vector<Tableau> enumerate_sst(const SkewDiagram& shape, int n) {
  return collect([&](const TableauVisitor& v) { for_each_sst(shape, n, v); });
}

void for_each_sst_with_content(const SkewDiagram& shape, const std::vector<int>& content,
                               const TableauVisitor& visit) {
  for (int c : content) {
    if (c < 0) throw DomainError("negative content");
  }
  if (std::accumulate(content.begin(), content.end(), 0) != shape.size()) return;
  if (shape.empty()) {
    (void)visit(Tableau(shape, Alphabet::standard(static_cast<int>(content.size())),
                        std::vector<std::vector<int>>(static_cast<std::size_t>(shape.outer().length()))));
    return;
  }
  Filler f(shape, Alphabet::standard(static_cast<int>(content.size())), visit);
  f.set_content(content, false);
  f.run();
}

Integer kostka_number(const SkewDiagram& shape, const std::vector<int>& content) {
  Integer count = 0;
  for_each_sst_with_content(shape, content, [&count](const Tableau&) {
    ++count;
    return true;
  });
  return count;
}

void for_each_admissible(const SkewDiagram& shape, int n, const TableauVisitor& visit) {
  if (n < 0) throw DomainError("alphabet size must be nonnegative");
  Filler(shape, Alphabet::signed_b(n), visit).run();
}

std::vector<Tableau> enumerate_admissible(const SkewDiagram& shape, int n) {
  return collect([&](const TableauVisitor& v) { for_each_admissible(shape, n, v); });
}

void for_each_L_admissible(const BorderStrip& bs, int n, const TableauVisitor& visit) {
  if (n < 1) throw DomainError("rank must be positive");
  if (bs.empty() || bs.columns().back() != 2 * n) {
    throw DomainError("L-admissible tableaux need a strip whose last column has length 2n");
  }
  SkewDiagram shape = realize_border_strip(bs);
  Filler f(shape, Alphabet::signed_b(n), visit);
  // The leftmost column is column 0 and ends in row outer'_1 - 1.
  int bottom = shape.outer().length() - 1;
  for (int k = 0; k < n; ++k) f.freeze({bottom - k, 0}, -1 - k);
  f.run();
}

std::vector<Tableau> enumerate_L_admissible(const BorderStrip& bs, int n) {
  return collect([&](const TableauVisitor& v) { for_each_L_admissible(bs, n, v); });
}

bool is_lattice_permutation(const Tableau& t) {
  if (t.alphabet().kind != AlphabetKind::Standard) throw DomainError("lattice words use the standard alphabet");
  std::vector<int> counts(static_cast<std::size_t>(t.alphabet().n) + 1, 0);
  for (int a : t.reading_word()) {
    auto idx = static_cast<std::size_t>(a);
    ++counts[idx];
    if (a > 1 && counts[idx] > counts[idx - 1]) return false;
  }
  return true;
}

Integer count_LR(const BorderStrip& bs, const Partition& content) {
  if (bs.size() != content.size()) return 0;
  SkewDiagram shape = realize_border_strip(bs);
  if (shape.empty()) return 1;
  Integer count = 0;
  TableauVisitor visit = [&count](const Tableau&) {
    ++count;
    return true;
  };
  // Along a border strip the fill order is the reading order, so the lattice
  // condition can be checked as letters are placed.
  Filler f(shape, Alphabet::standard(content.length()), visit);
  f.set_content(content.parts(), true);
  f.run();
  return count;
}

bool GZScheme::is_valid() const {
  if (rows.empty()) return false;
  if (rows.front().length() > N) return false;
  for (std::size_t m = 1; m < rows.size(); ++m) {
    const auto& cur = rows[m];
    const auto& prev = rows[m - 1];
    if (cur.length() > N + static_cast<int>(m)) return false;
    for (int i = 0; i < cur.length() || i < prev.length(); ++i) {
      if (cur.part(i) < prev.part(i) || prev.part(i) < cur.part(i + 1)) return false;
    }
  }
  return true;
}

ExponentVector GZScheme::weight() const {
  std::vector<int> d(static_cast<std::size_t>(n()), 0);
  for (int m = 1; m <= n(); ++m) {
    d[static_cast<std::size_t>(m - 1)] = 2 * (rows[static_cast<std::size_t>(m)].size() - rows[static_cast<std::size_t>(m - 1)].size());
  }
  return ExponentVector(std::move(d));
}

GZScheme gz_from_sst(const Tableau& t, int N) {
  if (t.alphabet().kind != AlphabetKind::Standard) throw DomainError("GZ schemes encode standard tableaux");
  const auto& shape = t.shape();
  if (shape.inner().length() > N) throw DomainError("inner shape has more than N rows");
  GZScheme g;
  g.N = N;
  const int n = t.alphabet().n;
  for (int m = 0; m <= n; ++m) {
    std::vector<int> parts(static_cast<std::size_t>(shape.outer().length()));
    for (int i = 0; i < shape.outer().length(); ++i) {
      const auto& row = t.rows()[static_cast<std::size_t>(i)];
      parts[static_cast<std::size_t>(i)] =
          shape.inner().part(i) + static_cast<int>(std::count_if(row.begin(), row.end(), [m](int v) { return v <= m; }));
    }
    g.rows.emplace_back(std::move(parts));
  }
  if (!g.is_valid()) throw DomainError("tableau does not fit a GZ scheme with N=" + std::to_string(N));
  return g;
}

Tableau sst_from_gz(const GZScheme& g) {
  if (!g.is_valid()) throw DomainError("GZ scheme violates interlacing");
  const Partition& mu = g.rows.front();
  const Partition& lambda = g.rows.back();
  SkewDiagram shape(lambda, mu);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  for (int m = 1; m <= g.n(); ++m) {
    const auto& cur = g.rows[static_cast<std::size_t>(m)];
    const auto& prev = g.rows[static_cast<std::size_t>(m - 1)];
    for (int i = 0; i < cur.length(); ++i) {
      for (int j = prev.part(i); j < cur.part(i); ++j) rows[static_cast<std::size_t>(i)].push_back(m);
    }
  }
  return Tableau(std::move(shape), Alphabet::standard(g.n()), std::move(rows));
}

}  // namespace skewpath
