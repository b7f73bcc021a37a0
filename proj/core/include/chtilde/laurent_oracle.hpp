#pragma once

#include <cstdint>
#include <string>

#include "chtilde/sparse_series.hpp"
#include "chtilde/tilde_ring.hpp"

namespace chtilde {

struct LaurentTag {
  static constexpr bool nonnegative_support = false;
};

/// Integer Laurent polynomial in one variable t; the key is the exponent.
using LaurentPoly = SparseSeries<LaurentTag>;

// Evaluation oracle: h~_i is sent to U_i(t) = t^i + t^{i-2} + ... + t^{-i},
// with U_{-1} = 0 and U_{i} = -U_{-i-2} for i <= -2. This realizes h_i as the
// complete homogeneous polynomial in u1 = t, u2 = 1/t. It is a commutative
// algebra reached through code that shares nothing with the module product,
// so agreement between the two is evidence against a shared bug.
//
// The map has a kernel (h~_0 + h~_{-2} -> 0), so it can only refute a formal
// identity, never establish one.

LaurentPoly eval_basis(std::int64_t i);

LaurentPoly eval(const TildeElement& g);

/// Convolution product.
LaurentPoly lmul(const LaurentPoly& p, const LaurentPoly& q);

/// eval(mul(g1, g2)) == lmul(eval(g1), eval(g2))
bool cross_check(const TildeElement& g1, const TildeElement& g2);

/// t -> 1/t
LaurentPoly invert_variable(const LaurentPoly& p);

bool is_palindromic(const LaurentPoly& p);

/// p(1)
BigInt evaluate_at_one(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);

}  // namespace chtilde
