#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chtilde/bigint.hpp"
#include "chtilde/tilde_ring.hpp"

namespace chtilde {

/// Finite multiset of integers. Multiplicities are arbitrary precision
/// because the witnesses produced by the recurrence engine outgrow 64 bits.
class IntegerMultiset {
 public:
  using Value = std::int64_t;
  using Multiplicities = std::map<Value, BigInt>;

  IntegerMultiset() = default;
  IntegerMultiset(std::initializer_list<Value> values);
  /// Throws std::invalid_argument on negative multiplicities; zeros are dropped.
  explicit IntegerMultiset(Multiplicities mult);

  BigInt mult(Value i) const;
  const Multiplicities& multiplicities() const noexcept { return mult_; }
  bool empty() const noexcept { return mult_.empty(); }
  BigInt size() const;
  Value min() const;  // precondition: !empty()
  Value max() const;  // precondition: !empty()

  void insert(Value i, const BigInt& count = 1);

  friend bool operator==(const IntegerMultiset&, const IntegerMultiset&) = default;

 private:
  Multiplicities mult_;
};

/// The even-step interval {a, a+2, ..., b}. Requires a <= b and a == b mod 2.
IntegerMultiset interval(std::int64_t a, std::int64_t b);

/// Sumset with multiplicity: mult(i, M1+M2) = sum_k mult(i-k, M1) mult(k, M2).
IntegerMultiset msum(const IntegerMultiset& m1, const IntegerMultiset& m2);

/// Pointwise multiplicity sum.
IntegerMultiset munion(const IntegerMultiset& m1, const IntegerMultiset& m2);

/// k copies of M unioned together.
IntegerMultiset scale(const IntegerMultiset& m, const BigInt& k);

/// S_k(M) = M + {k}.
IntegerMultiset shift(const IntegerMultiset& m, std::int64_t k);

struct IntervalBounds {
  std::int64_t lo;
  std::int64_t hi;
  friend bool operator==(const IntervalBounds&, const IntervalBounds&) = default;
};

/// Splits [a1,b1] + [a2,b2] into the nested intervals
/// [a1+a2+2j, b1+b2-2j], j = 0..min(b1-a1, b2-a2)/2.
std::vector<IntervalBounds> interval_sum_decompose(std::int64_t a1, std::int64_t b1,
                                                   std::int64_t a2, std::int64_t b2);

/// A run-length encoded certificate of membership in R(c): `singletons`
/// holds (m, count) with m >= c, `radii` holds (n, count) with n >= 1, each
/// radius standing for the interval [c-n, c+n]. Values are strictly
/// increasing within each list and every count is positive.
struct ConeDecomposition {
  std::int64_t center = 0;
  std::vector<std::pair<std::int64_t, BigInt>> singletons;
  std::vector<std::pair<std::int64_t, BigInt>> radii;

  friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

/// Thrown by decompose_cone when M is not in R(c); `witness` is an offset
/// i >= 0 at which the multiplicity profile violates the cone inequalities.
class ConeViolation : public std::domain_error {
 public:
  ConeViolation(std::int64_t center, std::int64_t witness, const std::string& what)
      : std::domain_error(what), center_(center), witness_(witness) {}
  std::int64_t center() const noexcept { return center_; }
  std::int64_t witness() const noexcept { return witness_; }

 private:
  std::int64_t center_;
  std::int64_t witness_;
};

/// First offset i >= 0 where mult(c-i-2) <= mult(c-i) <= mult(c+i) fails,
/// or -1 if M is in R(c).
std::int64_t cone_violation_offset(const IntegerMultiset& m, std::int64_t c);

/// Membership in R(c): singletons >= c plus symmetric even-step intervals
/// centered at c. Equivalently mult(c-i-2) <= mult(c-i) <= mult(c+i) for
/// all i >= 0.
bool in_cone(const IntegerMultiset& m, std::int64_t c);

enum class SubsetCheck { holds, fails, precondition_violated };

/// Checks R(c+1) ⊂ R(c) on one sample: requires M in R(c+1), then reports
/// whether M is also in R(c).
SubsetCheck cone_subset_check(std::int64_t c, const IntegerMultiset& m);

/// Canonical decomposition of M in R(c). Radii are read from the left
/// profile: the number of intervals of radius exactly n is
/// mult(c-n) - mult(c-n-2); what is left over must sit at or above c.
/// Throws ConeViolation if M is not in R(c).
ConeDecomposition decompose_cone(const IntegerMultiset& m, std::int64_t c);

IntegerMultiset recompose(const ConeDecomposition& d);

/// h~(M) = sum mult(i,M) h~_i
TildeElement to_tilde(const IntegerMultiset& m);

/// Inverse of to_tilde; throws std::domain_error on a negative coefficient.
IntegerMultiset to_multiset(const TildeElement& g);

/// "{2, 4^3, 6}" with ^k marking multiplicity k > 1; "{}" when empty.
std::string to_string(const IntegerMultiset& m);

}  // namespace chtilde
