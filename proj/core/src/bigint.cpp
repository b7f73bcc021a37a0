#include "chtilde/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace chtilde {

BigInt parse_decimal(std::string_view text) {
  std::string s(text);
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("malformed integer literal: '" + s + "'");
  }
  return BigInt(s, 10);
}

}  // namespace chtilde
