#include "skewpath/schur.hpp"

#include "skewpath/errors.hpp"
#include "skewpath/tableaux.hpp"

namespace skewpath {

ElementaryTable::ElementaryTable(RingContext ctx) : ctx_(ctx), zero_(ctx) {
  for (int m = 0; m <= ctx.rank; ++m) e_.push_back(elementary_symmetric(m, ctx));
}

const LaurentPolynomial& ElementaryTable::operator()(int m) const {
  if (m < 0 || m > ctx_.rank) return zero_;
  return e_[static_cast<std::size_t>(m)];
}

LaurentPolynomial schur_enumerative(const SkewDiagram& shape, RingContext ctx) {
  LaurentPolynomial sum(ctx);
  for_each_sst(shape, ctx.rank, [&sum](const Tableau& t) {
    sum.add_term(t.weight(), 1);
    return true;
  });
  return sum;
}

LaurentPolynomial schur_jacobi_trudi(const SkewDiagram& shape, RingContext ctx) {
  ElementaryTable e(ctx);
  Partition lc = shape.outer().conjugate();
  Partition mc = shape.inner().conjugate();
  const int r = std::max(lc.length(), 1);
  PolyMatrix m(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      m[static_cast<std::size_t>(i - 1)].push_back(e(lc.part(i - 1) - mc.part(j - 1) - i + j));
    }
  }
  return determinant(m);
}

LaurentPolynomial schur_border_strip_det(const BorderStrip& bs, RingContext ctx) {
  const int r = bs.r();
  if (r == 0) return LaurentPolynomial::one(ctx);
  ElementaryTable e(ctx);
  PolyMatrix m(static_cast<std::size_t>(r), std::vector<LaurentPolynomial>(static_cast<std::size_t>(r), LaurentPolynomial(ctx)));
  for (int a = 0; a < r; ++a) {
    int sum = 0;
    for (int b = a; b < r; ++b) {
      sum += bs.m(r - b);
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e(sum);
    }
    if (a > 0) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a - 1)] = LaurentPolynomial::one(ctx);
  }
  return determinant(m);
}

const LaurentPolynomial& StripSchurCache::operator()(const BorderStrip& bs) {
  const auto& cols = bs.columns();
  auto it = memo_.find(cols);
  if (it != memo_.end()) return it->second;
  LaurentPolynomial value = LaurentPolynomial::one(e_.context());
  const int r = bs.r();
  if (r > 0) {
    value = LaurentPolynomial(e_.context());
    int sum = 0;
    for (int i = 1; i <= r; ++i) {
      sum += bs.m(r - i + 1);
      const auto& ei = e_(sum);
      if (ei.is_zero()) continue;
      BorderStrip rest(std::vector<int>(cols.begin(), cols.begin() + (r - i)));
      const LaurentPolynomial& sub = (*this)(rest);
      if (i % 2 == 1) {
        value += ei * sub;
      } else {
        value -= ei * sub;
      }
    }
  }
  return memo_.emplace(cols, std::move(value)).first->second;
}

LaurentPolynomial schur_border_strip_recursive(const BorderStrip& bs, RingContext ctx) {
  StripSchurCache cache(ctx);
  return cache(bs);
}

LaurentPolynomial schur(const SkewDiagram& shape, RingContext ctx, SchurMethod method) {
  switch (method) {
    case SchurMethod::Enumerative:
      return schur_enumerative(shape, ctx);
    case SchurMethod::JacobiTrudi:
      return schur_jacobi_trudi(shape, ctx);
    case SchurMethod::BorderStrip: {
      auto bs = recognize_border_strip(shape);
      if (!bs) throw ShapeError(to_string(shape) + " is not a border strip");
      return schur_border_strip_det(*bs, ctx);
    }
  }
  throw DomainError("unknown Schur method");
}

LaurentPolynomial schur_conjugate_det(const SkewDiagram& shape, int n) {
  RingContext ctx{n, true};
  ElementaryTable e(ctx);
  Partition lc = shape.outer().conjugate();
  Partition mc = shape.inner().conjugate();
  const int r = std::max(lc.length(), 1);
  PolyMatrix m(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      m[static_cast<std::size_t>(i - 1)].push_back(e(n - lc.part(i - 1) + mc.part(j - 1) + i - j));
    }
  }
  return determinant(m);
}

LaurentPolynomial schur_conjugate_sum(const SkewDiagram& shape, int n) {
  return schur_enumerative(shape, {n, true}).x_inverted();
}

std::vector<Partition> partitions_of(int total, int max_length, int max_part) {
  std::vector<Partition> out;
  if (total < 0 || max_length < 0) return out;
  std::vector<int> current;
  // Parts chosen from largest to smallest, largest first gives lex-decreasing order.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, total, max_part < 0 ? total : max_part);
  return out;
}

std::map<Partition, Integer> lr_expand_by_extraction(const SkewDiagram& shape, int n) {
  std::map<Partition, Integer> out;
  std::vector<std::pair<Partition, Integer>> found;
  for (const Partition& nu : partitions_of(shape.size(), n)) {
    Integer c = kostka_number(shape, nu.parts());
    for (const auto& [rho, coeff] : found) c -= coeff * kostka_number(SkewDiagram(rho), nu.parts());
    if (c != 0) {
      found.emplace_back(nu, c);
      out.emplace(nu, c);
    }
  }
  return out;
}

std::map<Partition, Integer> lr_expand_by_counting(const BorderStrip& bs, int n) {
  std::map<Partition, Integer> out;
  for (const Partition& nu : partitions_of(bs.size(), n)) {
    Integer c = count_LR(bs, nu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

std::map<Partition, Integer> lr_expand(const SkewDiagram& shape, int n) {
  if (auto bs = recognize_border_strip(shape)) return lr_expand_by_counting(*bs, n);
  return lr_expand_by_extraction(shape, n);
}

}  // namespace skewpath
