#include "chtilde/sampling.hpp"

#include <map>

namespace chtilde::sampling {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::pair<std::int64_t, BigInt>> run_length(const std::map<std::int64_t, BigInt>& m) {
  return {m.begin(), m.end()};
}

}  // namespace

TildeElement random_tilde(Rng& rng, std::int64_t lo, std::int64_t hi, int max_coeff) {
  TildeElement g;
  for (std::int64_t j = lo; j <= hi; ++j) g.add_term(j, BigInt(uniform(rng, -max_coeff, max_coeff)));
  return g;
}

RandomInterval random_interval(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_steps) {
  const std::int64_t a = uniform(rng, lo, hi);
  return {a, a + 2 * uniform(rng, 0, max_steps)};
}

ConeDecomposition random_decomposition(Rng& rng, std::int64_t c) {
  std::map<std::int64_t, BigInt> singletons;
  std::map<std::int64_t, BigInt> radii;
  const std::int64_t k1 = uniform(rng, 0, 4);
  const std::int64_t k2 = uniform(rng, 0, 4);
  for (std::int64_t k = 0; k < k1; ++k) singletons[uniform(rng, c, c + 10)] += 1;
  for (std::int64_t k = 0; k < k2; ++k) radii[uniform(rng, 1, 6)] += 1;
  return {c, run_length(singletons), run_length(radii)};
}

}  // namespace chtilde::sampling
