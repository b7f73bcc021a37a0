#pragma once

#include <cstdint>
#include <random>

#include "chtilde/multiset_cone.hpp"
#include "chtilde/tilde_ring.hpp"

namespace chtilde::sampling {

/// All randomized checks draw from this engine; a fixed seed reproduces a run.
using Rng = std::mt19937_64;

/// Random element with support in [lo, hi] and coefficients in
/// [-max_coeff, max_coeff] (each index drawn independently, zero allowed).
TildeElement random_tilde(Rng& rng, std::int64_t lo = -6, std::int64_t hi = 6, int max_coeff = 3);

struct RandomInterval {
  std::int64_t a;
  std::int64_t b;
};

/// Parity-valid interval with a in [lo, hi] and (b - a)/2 in [0, max_steps].
RandomInterval random_interval(Rng& rng, std::int64_t lo = -10, std::int64_t hi = 10,
                               std::int64_t max_steps = 8);

/// Random decomposition centered at c: k1, k2 in [0,4] parts, singletons in
/// [c, c+10], radii in [1,6]. Its recomposition is a member of R(c) by
/// construction.
ConeDecomposition random_decomposition(Rng& rng, std::int64_t c);

}  // namespace chtilde::sampling
