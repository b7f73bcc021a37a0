#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "chtilde/bigint.hpp"

namespace chtilde::detail {

// Renders sum c_j * <prefix>j<suffix> with unit coefficients elided.
template <class Index>
std::string render_terms(const std::map<Index, BigInt>& coeffs, std::string_view prefix,
                         std::string_view suffix) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : coeffs) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    BigInt magnitude = abs(c);
    if (magnitude != 1) os << to_decimal(magnitude) << '*';
    os << prefix << index << suffix;
    first = false;
  }
  return os.str();
}

}  // namespace chtilde::detail
