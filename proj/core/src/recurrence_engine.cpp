#include "chtilde/recurrence_engine.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace chtilde {

const TildeElement& CoeffTriple::at(int i) const {
  switch (i) {
    case 0:
      return zero;
    case 1:
      return plus;
    case -1:
      return minus;
    default:
      throw std::invalid_argument("coefficient index i must be -1, 0 or 1");
  }
}

void validate_coeff_index(int n, int i, int j) {
  if (n < 0) throw std::invalid_argument("depth n must be non-negative");
  if (i < -1 || i > 1) throw std::invalid_argument("coefficient index i must be -1, 0 or 1");
  if (j < 0 || j > 1) throw std::invalid_argument("order j must be 0 or 1");
}

std::int64_t witness_center(int n, int j) {
  if (n < 0 || n > 60) throw std::invalid_argument("depth out of range for cone center");
  const std::int64_t c = std::int64_t{1} << (n + 1);
  return j == 0 ? c : c - 1;
}

IntegerMultiset left_expand(const IntegerMultiset& source, const IntegerMultiset& target) {
  IntegerMultiset out;
  const ChElement folded = fold_L(to_tilde(source));
  for (const auto& [i, c] : folded.coeffs()) {
    if (sgn(c) < 0) throw std::domain_error("left_expand: fold has a negative coefficient");
    out = munion(out, scale(msum(interval(-i, i), target), c));
  }
  return out;
}

namespace {

const TildeElement kH1 = basis(1);

CoeffTriple next_leading(const CoeffTriple& cur) {
  const TildeElement& a = cur.zero;
  const TildeElement& b = cur.plus;
  const TildeElement& d = cur.minus;

  CoeffTriple next;
  next.zero = mul(a, mul(a, a) - mul(b, b));
  const TildeElement ab = mul(a, b);
  next.plus = mul(b, mul(a, a)) + mul(a, ab) - mul(b, mul(kH1, ab));
  next.minus = next.plus + mul(d, mul(d, d - b));
  return next;
}

CoeffTriple next_penultimate(const TildeElement& a, const CoeffTriple& cur) {
  const TildeElement& p = cur.zero;
  const TildeElement& q = cur.plus;
  const TildeElement& r = cur.minus;
  const TildeElement s = shift(a, -1);
  const TildeElement ps = p + s;

  CoeffTriple next;
  next.zero = w0(a, a, ps) + w0(a, p, a) + w0(p, a, a);
  const TildeElement shared = w1(a, a, ps) + w1(a, p, a);
  next.plus = shared + w1(p, a, a);

  const TildeElement as = mul(a, s);
  next.minus = shared;
  next.minus += mul(r, mul(a, a));
  next.minus += mul(p, as);
  next.minus -= mul(r, mul(kH1, as));
  next.minus += BigInt(2) * mul(s, as);
  next.minus -= mul(s, mul(kH1, mul(s, s)));
  next.minus += mul(s, mul(r - q, s));
  return next;
}

std::string describe_difference(const TildeElement& lhs, const TildeElement& rhs) {
  std::string diff = to_string(lhs - rhs);
  if (diff.size() > 240) diff = diff.substr(0, 240) + " ...";
  return "lhs - rhs = " + diff;
}

Assertion equality(std::string name, std::string anchor, const TildeElement& lhs,
                   const TildeElement& rhs) {
  Assertion a{std::move(name), std::move(anchor), lhs == rhs, {}};
  if (!a.passed) a.witness = describe_difference(lhs, rhs);
  return a;
}

Assertion cone_assertion(std::string name, std::string anchor, const IntegerMultiset& m,
                         std::int64_t c) {
  Assertion a{std::move(name), std::move(anchor), true, {}};
  try {
    const ConeDecomposition d = decompose_cone(m, c);
    if (!(recompose(d) == m)) {
      a.passed = false;
      a.witness = "decomposition does not recompose to the witness";
    }
  } catch (const ConeViolation& e) {
    a.passed = false;
    a.witness = e.what();
  }
  return a;
}

}  // namespace

const CoeffTriple& RecurrenceEngine::leading_raw(int n) {
  validate_coeff_index(n, 0, 0);
  std::lock_guard lock(mutex_);
  if (leading_.empty()) leading_.emplace(0, CoeffTriple{basis(2), basis(1), basis(1)});
  for (int k = leading_.rbegin()->first; k < n; ++k) {
    leading_.emplace(k + 1, next_leading(leading_.at(k)));
  }
  return leading_.at(n);
}

const CoeffTriple& RecurrenceEngine::penultimate_raw(int n) {
  validate_coeff_index(n, 0, 1);
  std::lock_guard lock(mutex_);
  if (penultimate_.empty()) penultimate_.emplace(0, CoeffTriple{{}, {}, basis(0)});
  for (int k = penultimate_.rbegin()->first; k < n; ++k) {
    penultimate_.emplace(k + 1, next_penultimate(leading_raw(k).zero, penultimate_.at(k)));
  }
  return penultimate_.at(n);
}

const TildeElement& RecurrenceEngine::e0_raw(int n, int i) {
  validate_coeff_index(n, i, 0);
  return leading_raw(n).at(i);
}

const TildeElement& RecurrenceEngine::e1_raw(int n, int i) {
  validate_coeff_index(n, i, 1);
  return penultimate_raw(n).at(i);
}

const TildeElement& RecurrenceEngine::raw(int n, int i, int j) {
  validate_coeff_index(n, i, j);
  return j == 0 ? e0_raw(n, i) : e1_raw(n, i);
}

TildeElement RecurrenceEngine::leading_minus_extra_term(int n) {
  const CoeffTriple& cur = leading_raw(n);
  return mul(cur.minus, mul(cur.minus, cur.minus - cur.plus));
}

const IntegerMultiset& RecurrenceEngine::leading_witness(int n) {
  validate_coeff_index(n, 0, 0);
  std::lock_guard lock(mutex_);
  if (leading_witness_.empty()) leading_witness_.emplace(0, IntegerMultiset{2});
  for (int k = leading_witness_.rbegin()->first; k < n; ++k) {
    const IntegerMultiset& m0 = leading_witness_.at(k);
    leading_witness_.emplace(k + 1, left_expand(m0, msum(m0, m0)));
  }
  return leading_witness_.at(n);
}

const IntegerMultiset& RecurrenceEngine::penultimate_witness(int n) {
  validate_coeff_index(n, 0, 1);
  std::lock_guard lock(mutex_);
  if (penultimate_witness_.empty()) penultimate_witness_.emplace(0, IntegerMultiset{});
  for (int k = penultimate_witness_.rbegin()->first; k < n; ++k) {
    const IntegerMultiset& m0 = leading_witness(k);
    const IntegerMultiset& m1 = penultimate_witness_.at(k);
    IntegerMultiset next = left_expand(m0, msum(m0, shift(m0, -1)));
    next = munion(next, scale(left_expand(m0, msum(m0, m1)), 2));
    next = munion(next, left_expand(m1, msum(m0, m0)));
    penultimate_witness_.emplace(k + 1, std::move(next));
  }
  return penultimate_witness_.at(n);
}

MultisetWitness RecurrenceEngine::e0_closed(int n) { return {n, 0, leading_witness(n)}; }

MultisetWitness RecurrenceEngine::e1_closed(int n) { return {n, 1, penultimate_witness(n)}; }

TildeElement RecurrenceEngine::closed(int n, int i, int j) {
  validate_coeff_index(n, i, j);
  const TildeElement base = to_tilde(j == 0 ? leading_witness(n) : penultimate_witness(n));
  if (i == 0) return base;
  if (j == 0 || i == 1) return shift(base, -1);
  return shift(base, -1) + shift(to_tilde(leading_witness(n)), -2);
}

Report RecurrenceEngine::check_structure(int n_max) {
  validate_coeff_index(n_max, 0, 0);
  Report report;
  report.title = "structure";
  for (int n = 0; n <= n_max; ++n) {
    const std::string at = " (n=" + std::to_string(n) + ")";
    const CoeffTriple& lead = leading_raw(n);
    const CoeffTriple& pen = penultimate_raw(n);
    report.add(equality("leading: e(n,1,0) = S_-1 e(n,0,0)" + at, "leading shift identity",
                        lead.plus, shift(lead.zero, -1)));
    report.add(equality("leading: e(n,-1,0) = e(n,1,0)" + at, "leading minus/plus identity",
                        lead.minus, lead.plus));
    report.add(equality("penultimate: e(n,1,1) = S_-1 e(n,0,1)" + at, "penultimate shift identity",
                        pen.plus, shift(pen.zero, -1)));
    report.add(equality("penultimate: e(n,-1,1) = S_-1 e(n,0,1) + S_-2 e(n,0,0)" + at,
                        "penultimate minus identity", pen.minus,
                        shift(pen.zero, -1) + shift(lead.zero, -2)));
    report.add(equality("leading-minus extra term vanishes" + at, "literal extra term is zero",
                        leading_minus_extra_term(n), TildeElement{}));

    const IntegerMultiset& m0 = leading_witness(n);
    const IntegerMultiset& m1 = penultimate_witness(n);
    report.add(equality("raw e(n,0,0) = h~(M_n0)" + at, "leading closed form", lead.zero,
                        to_tilde(m0)));
    report.add(equality("raw e(n,0,1) = h~(M_n1)" + at, "penultimate closed form", pen.zero,
                        to_tilde(m1)));
    report.add(cone_assertion("M_n0 in R(2^(n+1))" + at, "leading cone membership", m0,
                              witness_center(n, 0)));
    report.add(cone_assertion("M_n1 in R(2^(n+1)-1)" + at, "penultimate cone membership", m1,
                              witness_center(n, 1)));
  }
  return report;
}

GrowthStats RecurrenceEngine::growth_stats(int n, int j) {
  validate_coeff_index(n, 0, j);
  const TildeElement& e = raw(n, 0, j);
  return {n, j, e.support_size(), e.min_index(), e.max_index(), e.mass()};
}

}  // namespace chtilde
