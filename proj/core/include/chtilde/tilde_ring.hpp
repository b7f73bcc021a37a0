#pragma once

#include <cstdint>
#include <string>

#include "chtilde/sparse_series.hpp"

namespace chtilde {

struct TildeTag {
  static constexpr bool nonnegative_support = false;
};
struct ChTag {
  static constexpr bool nonnegative_support = true;
};

/// Element of the free module on {h~_j : j in Z}. h~_{-1} is a nonzero
/// basis element; the relations only appear after fold_L.
using TildeElement = SparseSeries<TildeTag>;

/// Element of CH_2 in the h-basis, indices >= 0.
using ChElement = SparseSeries<ChTag>;

TildeElement basis(std::int64_t j);

/// Index translation: coefficient at j moves to j + k.
TildeElement shift(const TildeElement& g, std::int64_t k);

/// The fold map: h~_i -> h_i (i >= 0), h~_{-1} -> 0, h~_i -> -h_{-i-2} (i < -1).
ChElement fold_L(const TildeElement& g);

/// Inverse of fold_L on its image: h_i -> h~_i.
TildeElement lift(const ChElement& c);

/// Left action of h_i, i.e. sum_{k=0}^{i} shift(g, -i + 2k). Throws
/// std::invalid_argument for i < 0.
TildeElement left_mul_h(std::int64_t i, const TildeElement& g);

/// Product g1 g2 = L(g1) g2; the left factor is folded first.
TildeElement mul(const TildeElement& g1, const TildeElement& g2);

/// g2 (g1 g3 - S_{-1}(g1) S_{-1}(g3))
TildeElement w0(const TildeElement& g1, const TildeElement& g2, const TildeElement& g3);

/// S_{-1}(g1) g2 g3 + g1 g2 S_{-1}(g3) - S_{-1}(g1) h~_1 g2 S_{-1}(g3),
/// products grouped right to left.
TildeElement w1(const TildeElement& g1, const TildeElement& g2, const TildeElement& g3);

/// Product in CH_2 of h_i with c via the Clebsch-Gordan rule
/// h_i h_j = sum_{k=0}^{min(i,j)} h_{i+j-2k}. Independent of the module
/// product; used to check that fold_L intertwines the left action.
ChElement ch_mul_h(std::int64_t i, const ChElement& c);

/// "h~[2] + 3*h~[4] - h~[-1]", or "0".
std::string to_string(const TildeElement& g);
/// Same layout with "h[i]".
std::string to_string(const ChElement& c);

}  // namespace chtilde
