#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "chtilde/bigint.hpp"

namespace chtilde {

/// Finitely-supported map from integer index to BigInt coefficient.
///
/// Zero coefficients are never stored, so structural equality is the
/// mathematical equality. `Tag` keeps the module elements, the folded
/// image and the Laurent polynomials apart as distinct types; a tag may set
/// `nonnegative_support` to reject negative indices.
template <class Tag>
class SparseSeries {
 public:
  using Index = std::int64_t;
  using Coeffs = std::map<Index, BigInt>;

  SparseSeries() = default;

  explicit SparseSeries(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
  }

  static SparseSeries monomial(Index index, BigInt coeff = 1) {
    SparseSeries result;
    result.add_term(index, coeff);
    return result;
  }

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  BigInt coeff(Index index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  std::optional<Index> min_index() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  std::optional<Index> max_index() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  /// Sum of all coefficients.
  BigInt mass() const {
    BigInt total = 0;
    for (const auto& [index, c] : coeffs_) total += c;
    return total;
  }

  bool all_nonnegative() const {
    for (const auto& [index, c] : coeffs_) {
      if (sgn(c) < 0) return false;
    }
    return true;
  }

  void add_term(Index index, const BigInt& coeff) {
    check_index(index);
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  SparseSeries& operator+=(const SparseSeries& other) {
    for (const auto& [index, c] : other.coeffs_) add_term(index, c);
    return *this;
  }
  SparseSeries& operator-=(const SparseSeries& other) {
    for (const auto& [index, c] : other.coeffs_) add_term(index, -c);
    return *this;
  }
  SparseSeries& operator*=(const BigInt& scalar) {
    if (scalar == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [index, c] : coeffs_) c *= scalar;
    return *this;
  }

  friend SparseSeries operator+(SparseSeries lhs, const SparseSeries& rhs) {
    return lhs += rhs;
  }
  friend SparseSeries operator-(SparseSeries lhs, const SparseSeries& rhs) {
    return lhs -= rhs;
  }
  friend SparseSeries operator-(SparseSeries value) {
    for (auto& [index, c] : value.coeffs_) c = -c;
    return value;
  }
  friend SparseSeries operator*(const BigInt& scalar, SparseSeries value) {
    return value *= scalar;
  }
  friend SparseSeries operator*(SparseSeries value, const BigInt& scalar) {
    return value *= scalar;
  }

  friend bool operator==(const SparseSeries& a, const SparseSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_index(Index index) {
    if constexpr (Tag::nonnegative_support) {
      if (index < 0) throw std::invalid_argument("negative index in non-negative series");
    }
  }

  void canonicalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      check_index(it->first);
      if (it->second == 0) {
        it = coeffs_.erase(it);
      } else {
        ++it;
      }
    }
  }

  Coeffs coeffs_;
};

}  // namespace chtilde
