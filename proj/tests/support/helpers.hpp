#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>

#include "chtilde/laurent_oracle.hpp"
#include "chtilde/multiset_cone.hpp"
#include "chtilde/tilde_ring.hpp"

namespace testing_helpers {

using Terms = std::initializer_list<std::pair<const std::int64_t, chtilde::BigInt>>;

inline chtilde::TildeElement tilde(Terms terms) { return chtilde::TildeElement(terms); }
inline chtilde::ChElement ch(Terms terms) { return chtilde::ChElement(terms); }
inline chtilde::LaurentPoly laurent(Terms terms) { return chtilde::LaurentPoly(terms); }

}  // namespace testing_helpers

namespace chtilde {

// gtest printers
inline void PrintTo(const TildeElement& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const ChElement& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const IntegerMultiset& m, std::ostream* os) { *os << to_string(m); }

}  // namespace chtilde
