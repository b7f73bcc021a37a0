#include "chtilde/tilde_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "render.hpp"

namespace chtilde {

TildeElement basis(std::int64_t j) { return TildeElement::monomial(j); }

TildeElement shift(const TildeElement& g, std::int64_t k) {
  TildeElement::Coeffs out;
  for (const auto& [j, c] : g.coeffs()) out.emplace_hint(out.end(), j + k, c);
  return TildeElement(std::move(out));
}

ChElement fold_L(const TildeElement& g) {
  ChElement out;
  for (const auto& [j, c] : g.coeffs()) {
    if (j >= 0) {
      out.add_term(j, c);
    } else if (j < -1) {
      out.add_term(-j - 2, -c);
    }
  }
  return out;
}

TildeElement lift(const ChElement& c) { return TildeElement(ChElement::Coeffs(c.coeffs())); }

namespace {

// Dense accumulator over [lo, hi] for building a product before
// canonicalizing back to sparse form.
class DenseAccumulator {
 public:
  DenseAccumulator(std::int64_t lo, std::int64_t hi)
      : lo_(lo), cells_(static_cast<std::size_t>(hi - lo + 1)) {}

  void add(std::int64_t index, const BigInt& value) {
    cells_[static_cast<std::size_t>(index - lo_)] += value;
  }

  TildeElement finish() && {
    TildeElement::Coeffs out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (cells_[k] != 0) {
        out.emplace_hint(out.end(), lo_ + static_cast<std::int64_t>(k), std::move(cells_[k]));
      }
    }
    return TildeElement(std::move(out));
  }

 private:
  std::int64_t lo_;
  std::vector<BigInt> cells_;
};

}  // namespace

TildeElement left_mul_h(std::int64_t i, const TildeElement& g) {
  if (i < 0) throw std::invalid_argument("left_mul_h: index must be non-negative");
  if (g.is_zero()) return {};
  DenseAccumulator acc(*g.min_index() - i, *g.max_index() + i);
  for (const auto& [j, c] : g.coeffs()) {
    for (std::int64_t k = 0; k <= i; ++k) acc.add(j - i + 2 * k, c);
  }
  return std::move(acc).finish();
}

TildeElement mul(const TildeElement& g1, const TildeElement& g2) {
  const ChElement left = fold_L(g1);
  if (left.is_zero() || g2.is_zero()) return {};
  const std::int64_t reach = *left.max_index();
  DenseAccumulator acc(*g2.min_index() - reach, *g2.max_index() + reach);
  BigInt product;
  for (const auto& [i, ci] : left.coeffs()) {
    for (const auto& [j, cj] : g2.coeffs()) {
      product = ci * cj;
      for (std::int64_t k = 0; k <= i; ++k) acc.add(j - i + 2 * k, product);
    }
  }
  return std::move(acc).finish();
}

TildeElement w0(const TildeElement& g1, const TildeElement& g2, const TildeElement& g3) {
  return mul(g2, mul(g1, g3) - mul(shift(g1, -1), shift(g3, -1)));
}

TildeElement w1(const TildeElement& g1, const TildeElement& g2, const TildeElement& g3) {
  const TildeElement s1 = shift(g1, -1);
  const TildeElement s3 = shift(g3, -1);
  const TildeElement g2_s3 = mul(g2, s3);
  return mul(s1, mul(g2, g3)) + mul(g1, g2_s3) - mul(s1, left_mul_h(1, g2_s3));
}

ChElement ch_mul_h(std::int64_t i, const ChElement& c) {
  if (i < 0) throw std::invalid_argument("ch_mul_h: index must be non-negative");
  ChElement out;
  for (const auto& [j, cj] : c.coeffs()) {
    for (std::int64_t k = 0; k <= std::min(i, j); ++k) out.add_term(i + j - 2 * k, cj);
  }
  return out;
}

std::string to_string(const TildeElement& g) { return detail::render_terms(g.coeffs(), "h~[", "]"); }

std::string to_string(const ChElement& c) { return detail::render_terms(c.coeffs(), "h[", "]"); }

}  // namespace chtilde
