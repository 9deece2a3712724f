#pragma once

// Partitions, skew diagrams and border strips.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpath/polyring.hpp"

namespace skewpath {

class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless the parts are nonnegative and weakly
  // decreasing. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  // 0-based; zero beyond the length.
  int part(int i) const noexcept;

  Partition conjugate() const;
  bool contains(const Partition& other) const noexcept;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

// 0-based row and column of a box.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

class SkewDiagram {
 public:
  SkewDiagram() = default;
  // Throws DomainError unless outer contains inner.
  explicit SkewDiagram(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool contains(Cell c) const noexcept;
  // Row-major order.
  std::vector<Cell> cells() const;
  // Lengths of columns 1..outer[0], left to right (zero for empty columns).
  std::vector<int> column_lengths() const;

  bool operator==(const SkewDiagram&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

class BorderStrip {
 public:
  BorderStrip() = default;
  // Column lengths from the right; throws DomainError on a non-positive entry.
  explicit BorderStrip(std::vector<int> columns);

  const std::vector<int>& columns() const noexcept { return columns_; }
  int r() const noexcept { return static_cast<int>(columns_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return columns_.empty(); }
  // m_i, 1-based as in the column list notation.
  int m(int i) const { return columns_.at(static_cast<std::size_t>(i - 1)); }

  auto operator<=>(const BorderStrip&) const = default;
  bool operator==(const BorderStrip&) const = default;

 private:
  std::vector<int> columns_;
};

SkewDiagram realize_border_strip(const BorderStrip& bs);
// The column list of a border strip, or nullopt when sd is not one. The
// empty diagram gives the empty strip.
std::optional<BorderStrip> recognize_border_strip(const SkewDiagram& sd);

bool is_rank(const SkewDiagram& sd, int n);
bool is_connected(const SkewDiagram& sd);
bool is_border_strip(const SkewDiagram& sd);

// mu~/lambda with mu~ = (lambda_1^n, mu_1, mu_2, ...).
SkewDiagram complement(const SkewDiagram& sd, int n);
// Complement of the realized strip.
SkewDiagram complement(const BorderStrip& bs, int n);

int t_statistic(const BorderStrip& bs);

// A root c + b_coefficient * b of a Drinfel'd polynomial.
struct DrinfeldRoot {
  Rational constant;
  int b_coefficient = -1;
  bool operator==(const DrinfeldRoot&) const = default;
};

// P_i for i = 1..n-1, each listed by its roots in column order.
std::map<int, std::vector<DrinfeldRoot>> drinfeld_polynomials(const SkewDiagram& sd, int n);

std::string to_string(const Partition& p);
std::string to_string(const SkewDiagram& sd);
std::string to_string(const BorderStrip& bs);
std::string to_string(const DrinfeldRoot& root);

// "1,2,3"; the empty string gives the empty list.
std::vector<int> parse_int_list(std::string_view text);
// "5,4,3,1" (empty string or "0" for the empty partition).
Partition parse_partition(std::string_view text);
// "5,4,3,1/3,2" or a bare partition.
SkewDiagram parse_skew_diagram(std::string_view text);
// "<3,1,2>" or "<>".
BorderStrip parse_border_strip(std::string_view text);

}  // namespace skewpath
