#include "chtilde/laurent_oracle.hpp"

#include "render.hpp"

namespace chtilde {

LaurentPoly eval_basis(std::int64_t i) {
  if (i == -1) return {};
  if (i < -1) return -eval_basis(-i - 2);
  LaurentPoly::Coeffs out;
  for (std::int64_t e = -i; e <= i; e += 2) out.emplace_hint(out.end(), e, 1);
  return LaurentPoly(std::move(out));
}

LaurentPoly eval(const TildeElement& g) {
  LaurentPoly out;
  for (const auto& [i, c] : g.coeffs()) out += c * eval_basis(i);
  return out;
}

LaurentPoly lmul(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::Coeffs out;
  for (const auto& [a, ca] : p.coeffs()) {
    for (const auto& [b, cb] : q.coeffs()) out[a + b] += ca * cb;
  }
  return LaurentPoly(std::move(out));
}

bool cross_check(const TildeElement& g1, const TildeElement& g2) {
  return eval(mul(g1, g2)) == lmul(eval(g1), eval(g2));
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  LaurentPoly::Coeffs out;
  for (const auto& [e, c] : p.coeffs()) out.emplace(-e, c);
  return LaurentPoly(std::move(out));
}

bool is_palindromic(const LaurentPoly& p) { return invert_variable(p) == p; }

BigInt evaluate_at_one(const LaurentPoly& p) { return p.mass(); }

std::string to_string(const LaurentPoly& p) { return detail::render_terms(p.coeffs(), "t^", ""); }

}  // namespace chtilde
