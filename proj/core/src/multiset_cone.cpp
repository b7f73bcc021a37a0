#include "chtilde/multiset_cone.hpp"

#include <algorithm>
#include <sstream>

namespace chtilde {

IntegerMultiset::IntegerMultiset(std::initializer_list<Value> values) {
  for (Value v : values) insert(v);
}

IntegerMultiset::IntegerMultiset(Multiplicities mult) {
  for (auto& [value, count] : mult) {
    if (sgn(count) < 0) throw std::invalid_argument("negative multiplicity");
    if (count != 0) mult_.emplace_hint(mult_.end(), value, std::move(count));
  }
}

BigInt IntegerMultiset::mult(Value i) const {
  auto it = mult_.find(i);
  return it == mult_.end() ? BigInt(0) : it->second;
}

BigInt IntegerMultiset::size() const {
  BigInt total = 0;
  for (const auto& [value, count] : mult_) total += count;
  return total;
}

IntegerMultiset::Value IntegerMultiset::min() const { return mult_.begin()->first; }
IntegerMultiset::Value IntegerMultiset::max() const { return mult_.rbegin()->first; }

void IntegerMultiset::insert(Value i, const BigInt& count) {
  if (sgn(count) < 0) throw std::invalid_argument("negative multiplicity");
  if (count == 0) return;
  mult_[i] += count;
}

IntegerMultiset interval(std::int64_t a, std::int64_t b) {
  if (a > b) throw std::invalid_argument("interval: lower end exceeds upper end");
  if ((b - a) % 2 != 0) throw std::invalid_argument("interval: endpoints differ in parity");
  IntegerMultiset out;
  for (std::int64_t v = a; v <= b; v += 2) out.insert(v);
  return out;
}

IntegerMultiset msum(const IntegerMultiset& m1, const IntegerMultiset& m2) {
  IntegerMultiset::Multiplicities out;
  for (const auto& [x, cx] : m1.multiplicities()) {
    for (const auto& [y, cy] : m2.multiplicities()) out[x + y] += cx * cy;
  }
  return IntegerMultiset(std::move(out));
}

IntegerMultiset munion(const IntegerMultiset& m1, const IntegerMultiset& m2) {
  IntegerMultiset out = m1;
  for (const auto& [x, cx] : m2.multiplicities()) out.insert(x, cx);
  return out;
}

IntegerMultiset scale(const IntegerMultiset& m, const BigInt& k) {
  if (sgn(k) < 0) throw std::invalid_argument("scale: negative factor");
  IntegerMultiset::Multiplicities out;
  if (k == 0) return {};
  for (const auto& [x, cx] : m.multiplicities()) out.emplace_hint(out.end(), x, cx * k);
  return IntegerMultiset(std::move(out));
}

IntegerMultiset shift(const IntegerMultiset& m, std::int64_t k) {
  IntegerMultiset::Multiplicities out;
  for (const auto& [x, cx] : m.multiplicities()) out.emplace_hint(out.end(), x + k, cx);
  return IntegerMultiset(std::move(out));
}

std::vector<IntervalBounds> interval_sum_decompose(std::int64_t a1, std::int64_t b1,
                                                   std::int64_t a2, std::int64_t b2) {
  // Validate through the interval constructor's rules.
  if (a1 > b1 || a2 > b2) throw std::invalid_argument("interval: lower end exceeds upper end");
  if ((b1 - a1) % 2 != 0 || (b2 - a2) % 2 != 0) {
    throw std::invalid_argument("interval: endpoints differ in parity");
  }
  const std::int64_t steps = std::min(b1 - a1, b2 - a2) / 2;
  std::vector<IntervalBounds> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  for (std::int64_t j = 0; j <= steps; ++j) out.push_back({a1 + a2 + 2 * j, b1 + b2 - 2 * j});
  return out;
}

std::int64_t cone_violation_offset(const IntegerMultiset& m, std::int64_t c) {
  if (m.empty()) return -1;
  const std::int64_t reach = std::max(std::abs(c - m.min()), std::abs(m.max() - c)) + 2;
  for (std::int64_t i = 0; i <= reach; ++i) {
    const BigInt centre_left = m.mult(c - i);
    if (m.mult(c - i - 2) > centre_left) return i;
    if (centre_left > m.mult(c + i)) return i;
  }
  return -1;
}

bool in_cone(const IntegerMultiset& m, std::int64_t c) { return cone_violation_offset(m, c) < 0; }

SubsetCheck cone_subset_check(std::int64_t c, const IntegerMultiset& m) {
  if (!in_cone(m, c + 1)) return SubsetCheck::precondition_violated;
  return in_cone(m, c) ? SubsetCheck::holds : SubsetCheck::fails;
}

ConeDecomposition decompose_cone(const IntegerMultiset& m, std::int64_t c) {
  if (const std::int64_t i = cone_violation_offset(m, c); i >= 0) {
    std::ostringstream os;
    os << "multiset not in R(" << c << "): profile inequality fails at offset " << i;
    throw ConeViolation(c, i, os.str());
  }
  ConeDecomposition d;
  d.center = c;
  if (m.empty()) return d;

  IntegerMultiset::Multiplicities residue = m.multiplicities();
  for (std::int64_t n = 1; c - n >= m.min(); ++n) {
    const BigInt count = m.mult(c - n) - m.mult(c - n - 2);
    if (count == 0) continue;
    d.radii.emplace_back(n, count);
    for (std::int64_t v = c - n; v <= c + n; v += 2) residue[v] -= count;
  }
  for (const auto& [value, count] : residue) {
    if (count == 0) continue;
    // Unreachable when the profile check passed; kept as an internal guard.
    if (value < c || sgn(count) < 0) {
      throw ConeViolation(c, value >= c ? value - c : c - value,
                          "internal: residue after removing intervals is not a singleton list");
    }
    d.singletons.emplace_back(value, count);
  }
  return d;
}

IntegerMultiset recompose(const ConeDecomposition& d) {
  IntegerMultiset out;
  for (const auto& [value, count] : d.singletons) out.insert(value, count);
  for (const auto& [radius, count] : d.radii) {
    for (std::int64_t v = d.center - radius; v <= d.center + radius; v += 2) out.insert(v, count);
  }
  return out;
}

TildeElement to_tilde(const IntegerMultiset& m) {
  return TildeElement(TildeElement::Coeffs(m.multiplicities()));
}

IntegerMultiset to_multiset(const TildeElement& g) {
  if (!g.all_nonnegative()) {
    throw std::domain_error("to_multiset: element has a negative coefficient");
  }
  return IntegerMultiset(IntegerMultiset::Multiplicities(g.coeffs()));
}

std::string to_string(const IntegerMultiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [value, count] : m.multiplicities()) {
    if (!first) os << ", ";
    os << value;
    if (count != 1) os << '^' << to_decimal(count);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace chtilde
