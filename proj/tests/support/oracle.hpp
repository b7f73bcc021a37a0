#pragma once

// Test-only reference implementations. Nothing here calls into the product,
// shift, fold or multiset code under test; values are small enough for
// 128-bit integers.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "chtilde/multiset_cone.hpp"
#include "chtilde/tilde_ring.hpp"

namespace oracle {

using Int = __int128;
/// Laurent polynomial in t, exponent -> coefficient.
using Poly = std::map<std::int64_t, Int>;

inline void add(Poly& p, std::int64_t e, Int c) {
  if (c == 0) return;
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly pmul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) add(out, ea + eb, ca * cb);
  }
  return out;
}

/// U_i(t) = (t^{i+1} - t^{-i-1}) / (t - 1/t), computed by long division
/// for every integer i (U_{-1} = 0).
inline Poly chebyshev_u(std::int64_t i) {
  Poly out;
  if (i >= 0) {
    for (std::int64_t e = i; e >= -i; e -= 2) add(out, e, 1);
  } else if (i <= -2) {
    // t^{i+1} - t^{-i-1} = -(t^{m+1} - t^{-m-1}) with m = -i-2.
    const std::int64_t m = -i - 2;
    for (std::int64_t e = m; e >= -m; e -= 2) add(out, e, -1);
  }
  return out;
}

inline Int to_int(const chtilde::BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("oracle: coefficient too large");
  return static_cast<Int>(v.get_si());
}

/// phi(g) = sum_j c_j t^j: a bijection between module elements and Laurent
/// polynomials under which left multiplication by h_i is multiplication by U_i.
inline Poly phi(const chtilde::TildeElement& g) {
  Poly out;
  for (const auto& [j, c] : g.coeffs()) add(out, j, to_int(c));
  return out;
}

inline chtilde::TildeElement unphi(const Poly& p) {
  chtilde::TildeElement g;
  for (const auto& [e, c] : p) {
    const auto lo = static_cast<std::int64_t>(c);
    if (static_cast<Int>(lo) != c) throw std::overflow_error("oracle: coefficient too large");
    g.add_term(e, chtilde::BigInt(static_cast<long>(lo)));
  }
  return g;
}

/// Image of g in the commutative algebra: sum_j c_j U_j(t).
inline Poly chebyshev_image(const Poly& phi_g) {
  Poly out;
  for (const auto& [j, c] : phi_g) {
    for (const auto& [e, u] : chebyshev_u(j)) add(out, e, c * u);
  }
  return out;
}

/// Reference product g1 g2.
inline Poly product(const Poly& g1, const Poly& g2) { return pmul(chebyshev_image(g1), g2); }

inline chtilde::TildeElement product(const chtilde::TildeElement& g1,
                                     const chtilde::TildeElement& g2) {
  return unphi(product(phi(g1), phi(g2)));
}

inline Poly shift(const Poly& p, std::int64_t k) {
  Poly out;
  for (const auto& [e, c] : p) out[e + k] = c;
  return out;
}

inline Poly sub(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) add(a, e, -c);
  return a;
}

inline Poly plus(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) add(a, e, c);
  return a;
}

/// Multiset as an explicit list of values.
inline std::vector<std::int64_t> expand(const chtilde::IntegerMultiset& m) {
  std::vector<std::int64_t> out;
  for (const auto& [v, c] : m.multiplicities()) {
    for (unsigned long k = 0; k < c.get_ui(); ++k) out.push_back(v);
  }
  return out;
}

/// Sumset by enumerating every pair.
inline std::map<std::int64_t, long> brute_msum(const std::vector<std::int64_t>& a,
                                               const std::vector<std::int64_t>& b) {
  std::map<std::int64_t, long> out;
  for (auto x : a) {
    for (auto y : b) ++out[x + y];
  }
  return out;
}

inline std::map<std::int64_t, long> counts(const chtilde::IntegerMultiset& m) {
  std::map<std::int64_t, long> out;
  for (const auto& [v, c] : m.multiplicities()) out[v] = c.get_si();
  return out;
}

}  // namespace oracle
