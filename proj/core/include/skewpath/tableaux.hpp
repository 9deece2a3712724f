#pragma once

// Fillings of skew diagrams: semi-standard tableaux over 1..n, admissible
// tableaux over the signed alphabet 1 < ... < n < 0 < -n < ... < -1, and
// Gelfand-Tsetlin schemes.

#include <functional>
#include <set>
#include <vector>

#include "skewpath/polyring.hpp"
#include "skewpath/shapes.hpp"

namespace skewpath {

enum class AlphabetKind { Standard, SignedB };

struct Alphabet {
  AlphabetKind kind = AlphabetKind::Standard;
  int n = 0;

  static Alphabet standard(int n) { return {AlphabetKind::Standard, n}; }
  static Alphabet signed_b(int n) { return {AlphabetKind::SignedB, n}; }
  // Letters in increasing order.
  std::vector<int> letters() const;
  // Position of a letter in the total order (1-based); throws DomainError for
  // letters outside the alphabet.
  int rank(int letter) const;
  bool operator==(const Alphabet&) const = default;
};

class Tableau {
 public:
  // rows[i] lists the entries of row i of the shape from left to right.
  // Frozen cells count with half weight (see weight()).
  Tableau(SkewDiagram shape, Alphabet alphabet, std::vector<std::vector<int>> rows,
          std::set<Cell> frozen = {});

  const SkewDiagram& shape() const noexcept { return shape_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const std::set<Cell>& frozen() const noexcept { return frozen_; }
  int entry(Cell c) const;

  // Semi-standard (Standard alphabet) or admissible (SignedB alphabet).
  bool is_valid() const;
  // Entries read row by row from the top, each row from right to left. On a
  // border strip this is the order along the strip from its top-right end.
  std::vector<int> reading_word() const;
  // Exponent vector of prod x_a^{#a} (Standard), or of sum of eps_a with
  // eps_{+-i} = +-unit_i, eps_0 = 0 and frozen cells halved (SignedB).
  ExponentVector weight() const;
  // Number of occurrences of each letter 1..n (Standard alphabet only).
  std::vector<int> content() const;

  bool operator==(const Tableau&) const = default;

 private:
  SkewDiagram shape_;
  Alphabet alphabet_;
  std::vector<std::vector<int>> rows_;
  std::set<Cell> frozen_;
};

// Receives each tableau; return false to stop the enumeration.
using TableauVisitor = std::function<bool(const Tableau&)>;

void for_each_sst(const SkewDiagram& shape, int n, const TableauVisitor& visit);
std::vector<Tableau> enumerate_sst(const SkewDiagram& shape, int n);
// SST of the given content (content.size() letters).
void for_each_sst_with_content(const SkewDiagram& shape, const std::vector<int>& content,
                               const TableauVisitor& visit);
Integer kostka_number(const SkewDiagram& shape, const std::vector<int>& content);

void for_each_admissible(const SkewDiagram& shape, int n, const TableauVisitor& visit);
std::vector<Tableau> enumerate_admissible(const SkewDiagram& shape, int n);
// Admissible fillings of a strip <m_1,...,m_{r-1},2n> whose leftmost column
// ends with the frozen entries -n, -n+1, ..., -1. Throws DomainError when the
// last column length is not 2n.
void for_each_L_admissible(const BorderStrip& bs, int n, const TableauVisitor& visit);
std::vector<Tableau> enumerate_L_admissible(const BorderStrip& bs, int n);

bool is_lattice_permutation(const Tableau& t);
// Number of SST of shape bs with the given content whose reading word is a
// lattice permutation; 0 when the sizes differ.
Integer count_LR(const BorderStrip& bs, const Partition& content);

struct GZScheme {
  // rows[0] = mu, ..., rows[n] = lambda.
  int N = 0;
  std::vector<Partition> rows;

  int n() const noexcept { return static_cast<int>(rows.size()) - 1; }
  bool is_valid() const;
  ExponentVector weight() const;
  bool operator==(const GZScheme&) const = default;
};

// Throws DomainError if the inner shape has more than N rows or a row would
// exceed the allowed length N+m.
GZScheme gz_from_sst(const Tableau& t, int N);
// Throws DomainError if the scheme is not interlacing.
Tableau sst_from_gz(const GZScheme& g);

}  // namespace skewpath
