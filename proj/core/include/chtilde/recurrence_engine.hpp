#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "chtilde/multiset_cone.hpp"
#include "chtilde/report.hpp"
#include "chtilde/tilde_ring.hpp"

namespace chtilde {

/// The three members i = 0, 1, -1 of one family at a fixed depth.
struct CoeffTriple {
  TildeElement zero;
  TildeElement plus;
  TildeElement minus;

  const TildeElement& at(int i) const;
};

/// M with to_tilde(M) equal to e(n, 0, j).
struct MultisetWitness {
  int n = 0;
  int j = 0;
  IntegerMultiset multiset;
};

struct GrowthStats {
  int n = 0;
  int j = 0;
  std::size_t support_size = 0;
  std::optional<std::int64_t> min_index;
  std::optional<std::int64_t> max_index;
  BigInt mass;
};

/// Throws std::invalid_argument unless n >= 0, i in {-1,0,1}, j in {0,1}.
void validate_coeff_index(int n, int i, int j);

/// Center of the cone that holds M_{n,j}: 2^{n+1} for j = 0, 2^{n+1} - 1 for j = 1.
std::int64_t witness_center(int n, int j);

/// Computes the leading (j = 0) and penultimate leading (j = 1) coefficient
/// families e(n, i, j), i in {-1, 0, 1}, in two ways:
///
///  * raw: the defining recurrences, every right-hand side read at depth n
///    and every unparenthesized product grouped right to left;
///  * closed: multiset witnesses M_{n,j}, built from sumsets and the
///    interval expansion of left multiplication.
///
/// Results are memoized per depth. Entries are written once and never
/// erased, so returned references stay valid for the engine's lifetime.
/// All public members are safe to call concurrently.
class RecurrenceEngine {
 public:
  const CoeffTriple& leading_raw(int n);
  const CoeffTriple& penultimate_raw(int n);

  const TildeElement& e0_raw(int n, int i);
  const TildeElement& e1_raw(int n, int i);
  const TildeElement& raw(int n, int i, int j);

  /// The term e(n,-1,0)^2 (e(n,-1,0) - e(n,1,0)) that the i = -1 leading
  /// recurrence adds when stepping from depth n to n + 1.
  TildeElement leading_minus_extra_term(int n);

  MultisetWitness e0_closed(int n);
  MultisetWitness e1_closed(int n);

  /// e(n, i, j) from the witnesses and the shift identities.
  TildeElement closed(int n, int i, int j);

  Report check_structure(int n_max);

  GrowthStats growth_stats(int n, int j);

 private:
  const IntegerMultiset& leading_witness(int n);
  const IntegerMultiset& penultimate_witness(int n);

  std::recursive_mutex mutex_;
  std::map<int, CoeffTriple> leading_;
  std::map<int, CoeffTriple> penultimate_;
  std::map<int, IntegerMultiset> leading_witness_;
  std::map<int, IntegerMultiset> penultimate_witness_;
};

/// Left multiplication of h~(target) by L(h~(source)), carried out on
/// multisets: each term c h_i of the fold contributes c copies of
/// [-i, i] + target. Throws std::domain_error if the fold has a negative
/// coefficient.
IntegerMultiset left_expand(const IntegerMultiset& source, const IntegerMultiset& target);

}  // namespace chtilde
