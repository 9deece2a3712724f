#include <doctest.h>

#include "oracles.hpp"
#include "skewpath/errors.hpp"
#include "skewpath/schur.hpp"
#include "skewpath/shapes.hpp"

using namespace skewpath;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

DrinfeldRoot root(Rational c) { return DrinfeldRoot{c, -1}; }

}  // namespace

TEST_CASE("partitions") {
  CHECK(P({4, 3, 2, 0, 0}) == P({4, 3, 2}));
  CHECK(P({4, 3, 2}).size() == 9);
  CHECK(P({4, 3, 2}).part(5) == 0);
  CHECK_THROWS_AS(P({1, 2}), DomainError);
  CHECK_THROWS_AS(P({2, -1}), DomainError);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(P({4, 3, 2})) == P({3, 3, 2, 1}));
  CHECK(conjugate(P({})) == P({}));
  CHECK(conjugate(P({5, 5, 5, 5})) == P({4, 4, 4, 4, 4}));
}

TEST_CASE("conjugation is an involution") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Partition p = oracle::random_partition(rng, 7, 7);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("skew diagrams") {
  SkewDiagram sd(P({5, 4, 4, 1}), P({4, 3, 2}));
  CHECK(sd.size() == 5);
  std::vector<int> cols{1, 0, 1, 2, 1};
  CHECK(sd.column_lengths() == cols);
  CHECK(sd.contains({0, 4}));
  CHECK_FALSE(sd.contains({0, 3}));
  CHECK(sd.cells().size() == 5);
  CHECK_THROWS_AS(SkewDiagram(P({2}), P({3})), DomainError);
}

TEST_CASE("realize border strip examples") {
  CHECK(realize_border_strip(BorderStrip({2})) == SkewDiagram(P({1, 1})));
  CHECK(realize_border_strip(BorderStrip({1, 1})) == SkewDiagram(P({2})));
  SkewDiagram s = realize_border_strip(BorderStrip({3, 1, 2}));
  CHECK(s == SkewDiagram(P({3, 3, 3, 1}), P({2, 2})));
  std::vector<int> cols{2, 1, 3};
  CHECK(s.column_lengths() == cols);
  CHECK(realize_border_strip(BorderStrip()).empty());
}

TEST_CASE("realize and recognize are inverse on random strips") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BorderStrip bs = oracle::random_strip(rng, 6, 5);
    SkewDiagram sd = realize_border_strip(bs);
    CHECK(is_border_strip(sd));
    CHECK(sd.size() == bs.size());
    auto back = recognize_border_strip(sd);
    REQUIRE(back.has_value());
    CHECK(*back == bs);
    auto cols = sd.column_lengths();
    std::vector<int> from_right(cols.rbegin(), cols.rend());
    CHECK(from_right == bs.columns());
  }
}

TEST_CASE("rank and border strip predicates") {
  SkewDiagram fig(P({5, 4, 4, 1}), P({4, 3, 2}));
  CHECK(is_rank(fig, 3));
  CHECK_FALSE(is_rank(fig, 1));
  CHECK(is_border_strip(fig) == false);
  CHECK_FALSE(is_border_strip(SkewDiagram(P({2, 2}))));
  SkewDiagram split(P({2, 1}), P({1}));
  CHECK_FALSE(is_connected(split));
  CHECK_FALSE(is_border_strip(split));
  CHECK_FALSE(recognize_border_strip(split).has_value());
  CHECK(is_border_strip(SkewDiagram(P({3, 3, 1}), P({2, 1}))) == false);
  CHECK(is_border_strip(SkewDiagram(P({3, 2}), P({1}))));
}

TEST_CASE("complement examples") {
  SkewDiagram c = complement(SkewDiagram(P({5, 4, 3, 1}), P({3, 2})), 4);
  CHECK(c == SkewDiagram(P({5, 5, 5, 5, 3, 2}), P({5, 4, 3, 1})));
  CHECK(complement(SkewDiagram(P({1})), 2) == SkewDiagram(P({1, 1}), P({1})));
  CHECK_THROWS_AS(complement(SkewDiagram(P({1, 1, 1})), 2), DomainError);
}

TEST_CASE("complement sizes and double complement") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(1, 4);
    SkewDiagram sd = oracle::random_skew(rng, 5, 4);
    if (!is_rank(sd, n)) continue;
    SkewDiagram c = complement(sd, n);
    CHECK(c.size() == n * sd.outer().part(0) - sd.size());
    REQUIRE(is_rank(c, n));
    SkewDiagram cc = complement(c, n);
    RingContext ctx{n, true};
    CHECK(schur_jacobi_trudi(cc, ctx) == schur_jacobi_trudi(sd, ctx));
  }
}

TEST_CASE("t statistic") {
  CHECK(t_statistic(BorderStrip()) == 0);
  CHECK(t_statistic(BorderStrip({4})) == 0);
  CHECK(t_statistic(BorderStrip({1, 1})) == 1);
  CHECK(t_statistic(BorderStrip({1, 2, 3})) == 4);
  CHECK(t_statistic(BorderStrip({1, 2, 1, 2})) == 8);
  CHECK(t_statistic(BorderStrip({2, 2, 1, 1})) == 11);
}

TEST_CASE("Drinfeld polynomials") {
  auto p = drinfeld_polynomials(SkewDiagram(P({5, 4, 4, 1}), P({4, 3, 2})), 4);
  std::vector<DrinfeldRoot> p1{root(-3), root(0), root(4)};
  std::vector<DrinfeldRoot> p2{root(Rational(3, 2))};
  CHECK(p[1] == p1);
  CHECK(p[2] == p2);
  CHECK(p[3].empty());
  CHECK(to_string(p[2][0]) == "3/2-b");
  CHECK(to_string(p[1][0]) == "-3-b");

  auto empty = drinfeld_polynomials(SkewDiagram(), 3);
  for (const auto& [i, roots] : empty) CHECK(roots.empty());

  auto box = drinfeld_polynomials(SkewDiagram(P({1})), 3);
  CHECK(box[1].size() == 1);
  CHECK(box[2].empty());
}

TEST_CASE("Drinfeld degrees account for every box of a strip") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    BorderStrip bs = oracle::random_strip(rng, 5, 4);
    int n = 5;
    int total = 0;
    for (const auto& [i, roots] : drinfeld_polynomials(realize_border_strip(bs), n)) {
      total += i * static_cast<int>(roots.size());
    }
    CHECK(total == bs.size());
  }
}

TEST_CASE("text formats") {
  CHECK(parse_partition("5,4,3,1") == P({5, 4, 3, 1}));
  CHECK(parse_partition("") == P({}));
  CHECK(parse_partition("0") == P({}));
  CHECK(to_string(P({})) == "0");
  CHECK(parse_skew_diagram("5,4,3,1/3,2") == SkewDiagram(P({5, 4, 3, 1}), P({3, 2})));
  CHECK(parse_skew_diagram("2/0") == SkewDiagram(P({2})));
  CHECK(to_string(SkewDiagram(P({5, 4}), P({3}))) == "5,4/3");
  CHECK(parse_border_strip("<3,1,2>") == BorderStrip({3, 1, 2}));
  CHECK(parse_border_strip("<>") == BorderStrip());
  CHECK(to_string(BorderStrip({3, 1, 2})) == "<3,1,2>");

  auto token_of = [](auto&& f) {
    try {
      f();
    } catch (const ParseError& e) {
      return e.token();
    }
    return std::string("<no error>");
  };
  CHECK(token_of([] { parse_partition("5,x,1"); }) == "x");
  CHECK(token_of([] { parse_partition("1,3"); }) == "1,3");
  CHECK(token_of([] { parse_skew_diagram("2/3"); }) == "2/3");
  CHECK(token_of([] { parse_border_strip("3,1"); }) == "3,1");
  CHECK(token_of([] { parse_border_strip("<2,0>"); }) == "0");
}
