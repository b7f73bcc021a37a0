#include "chtilde/verification.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chtilde/certifier.hpp"
#include "chtilde/laurent_oracle.hpp"
#include "chtilde/multiset_cone.hpp"
#include "chtilde/sampling.hpp"

namespace chtilde {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {
    "lemmas", "w-theorem", "multiset", "cone", "shift", "positivity", "cross", "oracle"};

// Counts cases and keeps the smallest failing instance by a caller-supplied
// weight, so a failed assertion reports a minimal witness.
class Tally {
 public:
  void check(bool ok, std::size_t weight, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (!smallest_ || weight < smallest_->first) smallest_.emplace(weight, describe());
  }

  Assertion finish(const std::string& name, std::string anchor) const {
    Assertion a;
    a.name = name + " (" + std::to_string(cases_) + " cases)";
    a.anchor = std::move(anchor);
    a.passed = failures_ == 0;
    if (smallest_) {
      a.witness = std::to_string(failures_) + " failing; smallest: " + smallest_->second;
    }
    return a;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::optional<std::pair<std::size_t, std::string>> smallest_;
};

std::size_t weight_of(const TildeElement& g) {
  std::size_t w = 0;
  for (const auto& [j, c] : g.coeffs()) w += BigInt(abs(c)).get_ui() + static_cast<std::size_t>(std::abs(j));
  return w;
}

std::size_t weight_of(const IntegerMultiset& m) {
  std::size_t w = 0;
  for (const auto& [v, c] : m.multiplicities()) w += c.get_ui() + static_cast<std::size_t>(std::abs(v));
  return w;
}

std::string args(std::initializer_list<std::pair<const char*, std::int64_t>> named) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : named) {
    os << (first ? "" : ", ") << name << '=' << value;
    first = false;
  }
  return os.str();
}

TildeElement h(std::int64_t j) { return basis(j); }

// Three-factor products grouped left to right.
TildeElement mul3(const TildeElement& x, const TildeElement& y, const TildeElement& z) {
  return mul(mul(x, y), z);
}

// Product-rule checks over index boxes.
Report lemmas_suite(const SuiteConfig& cfg) {
  Report r{"lemmas", {}};
  const std::int64_t n = std::max(cfg.n, 0);
  Tally t11, t1m1;
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      const auto weight = static_cast<std::size_t>(std::abs(a) + std::abs(b));
      const auto who = [&] { return args({{"A", a}, {"B", b}}); };
      t11.check(mul(h(a), h(b)) - mul(h(a - 1), h(b - 1)) == h(a + b), weight, who);
      t1m1.check(mul(h(a), h(b)) - mul(h(a - 1), h(b + 1)) == h(b - a), weight, who);
    }
  }
  r.add(t11.finish("h_A h_B - h_{A-1} h_{B-1} = h_{A+B}, |A|,|B| <= " + std::to_string(n),
                   "two-factor product rule (sum)"));
  r.add(t1m1.finish("h_A h_B - h_{A-1} h_{B+1} = h_{B-A}, |A|,|B| <= " + std::to_string(n),
                    "two-factor product rule (difference)"));

  const std::int64_t m = std::max<std::int64_t>(n - 2, 0);
  Tally thbaa, thaba;
  for (std::int64_t b = -m; b <= m; ++b) {
    for (std::int64_t a1 = -m; a1 <= m; ++a1) {
      for (std::int64_t a2 = -m; a2 <= m; ++a2) {
        const auto weight = static_cast<std::size_t>(std::abs(b) + std::abs(a1) + std::abs(a2));
        const auto who = [&] { return args({{"A1", a1}, {"A2", a2}, {"B", b}}); };
        thbaa.check(mul3(h(b), h(a1), h(a2)) - mul3(h(b), h(a1 - 1), h(a2 - 1)) ==
                        mul(h(b), h(a1 + a2)),
                    weight, who);
        const TildeElement lhs = mul3(h(a1), h(b), h(a2 - 1)) + mul3(h(a1 - 1), h(b), h(a2)) -
                                 mul(mul3(h(a1 - 1), h(1), h(b)), h(a2 - 1));
        thaba.check(lhs == mul(h(b), h(a1 + a2 - 1)), weight, who);
      }
    }
  }
  r.add(thbaa.finish("h_B h_A1 h_A2 - h_B h_{A1-1} h_{A2-1} = h_B h_{A1+A2}, box " +
                         std::to_string(m),
                     "three-factor product rule (sum)"));
  r.add(thaba.finish("h_A1 h_B h_{A2-1} + h_{A1-1} h_B h_A2 - h_{A1-1} h_1 h_B h_{A2-1} = "
                     "h_B h_{A1+A2-1}, box " + std::to_string(m),
                     "three-factor product rule (mixed)"));
  return r;
}

Report w_theorem_suite(const SuiteConfig& cfg) {
  Report r{"w-theorem", {}};
  sampling::Rng rng(cfg.seed);
  Tally tw, tassoc;
  for (int k = 0; k < cfg.trials; ++k) {
    const TildeElement g1 = sampling::random_tilde(rng);
    const TildeElement g2 = sampling::random_tilde(rng);
    const TildeElement g3 = sampling::random_tilde(rng);
    const std::size_t weight = weight_of(g1) + weight_of(g2) + weight_of(g3);
    const auto who = [&] {
      return "g1=" + to_string(g1) + "; g2=" + to_string(g2) + "; g3=" + to_string(g3);
    };
    tw.check(w1(g1, g2, g3) == shift(w0(g1, g2, g3), -1), weight, who);
    tassoc.check(mul(mul(g1, g2), g3) == mul(g1, mul(g2, g3)), weight, who);
  }
  r.add(tw.finish("W1(g1,g2,g3) = S_-1 W0(g1,g2,g3), random triples", "W1 is the shifted W0"));
  r.add(tassoc.finish("(g1 g2) g3 = g1 (g2 g3), random triples",
                      "associativity of the module product (empirical)"));
  return r;
}

Report multiset_suite(const SuiteConfig& cfg) {
  Report r{"multiset", {}};
  sampling::Rng rng(cfg.seed);

  Tally tmn;
  for (int k = 0; k < cfg.trials; ++k) {
    const auto [a1, b1] = sampling::random_interval(rng);
    const auto [a2, b2] = sampling::random_interval(rng);
    IntegerMultiset joined;
    for (const auto& [lo, hi] : interval_sum_decompose(a1, b1, a2, b2)) {
      joined = munion(joined, interval(lo, hi));
    }
    tmn.check(joined == msum(interval(a1, b1), interval(a2, b2)),
              static_cast<std::size_t>(b1 - a1 + b2 - a2),
              [&] { return args({{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}}); });
  }
  r.add(tmn.finish("[a1,b1] + [a2,b2] = union of nested intervals", "interval sumset"));

  Tally tadd, tsub, tleft, tleft_cone, tpos, tround;
  std::uniform_int_distribution<std::int64_t> centers(-5, 5);
  std::uniform_int_distribution<std::int64_t> nonneg_centers(0, 8);
  std::uniform_int_distribution<std::int64_t> left_degree(0, 6);
  for (int k = 0; k < cfg.trials; ++k) {
    const std::int64_t c1 = centers(rng);
    const std::int64_t c2 = centers(rng);
    const ConeDecomposition d1 = sampling::random_decomposition(rng, c1);
    const ConeDecomposition d2 = sampling::random_decomposition(rng, c2);
    const IntegerMultiset m1 = recompose(d1);
    const IntegerMultiset m2 = recompose(d2);
    const std::size_t w = weight_of(m1) + weight_of(m2);
    const auto who = [&] {
      return "c1=" + std::to_string(c1) + " M1=" + to_string(m1) + "; c2=" + std::to_string(c2) +
             " M2=" + to_string(m2);
    };
    tadd.check(in_cone(msum(m1, m2), c1 + c2), w, who);
    tround.check(decompose_cone(m1, c1) == d1, w, who);

    // Same samples, viewed as members of R(c1) with c1 = c + 1.
    tsub.check(cone_subset_check(c1 - 1, m1) == SubsetCheck::holds, w, who);

    const std::int64_t i = left_degree(rng);
    const auto who_left = [&] { return "i=" + std::to_string(i) + " " + who(); };
    const IntegerMultiset expanded = msum(interval(-i, i), m1);
    tleft.check(to_tilde(expanded) == left_mul_h(i, to_tilde(m1)), w, who_left);
    tleft_cone.check(in_cone(expanded, c1), w, who_left);

    const std::int64_t c = nonneg_centers(rng);
    const IntegerMultiset mp = recompose(sampling::random_decomposition(rng, c));
    bool profile_ok = true;
    if (!mp.empty()) {
      for (std::int64_t idx = 0; idx <= std::max<std::int64_t>(mp.max(), -mp.min()); ++idx) {
        profile_ok = profile_ok && mp.mult(idx) >= mp.mult(-idx - 2);
      }
    }
    tpos.check(profile_ok && fold_L(to_tilde(mp)).all_nonnegative(), weight_of(mp),
               [&] { return "c=" + std::to_string(c) + " M=" + to_string(mp); });
  }
  r.add(tadd.finish("M1 in R(c1), M2 in R(c2) => M1 + M2 in R(c1 + c2)", "cone sumset closure"));
  r.add(tsub.finish("M in R(c+1) => M in R(c)", "cone nesting"));
  r.add(tleft.finish("h~([-i,i] + M) = h_i h~(M)", "left multiplication as interval sumset"));
  r.add(tleft_cone.finish("M in R(c) => [-i,i] + M in R(c)", "left multiplication keeps the cone"));
  r.add(tpos.finish("M in R(c), c >= 0 => L(h~(M)) has non-negative coefficients",
                    "positivity from the cone"));
  r.add(tround.finish("decompose(recompose(D)) = D", "canonical cone decomposition"));
  return r;
}

Report shift_suite(const SuiteConfig& cfg, RecurrenceEngine& engine) {
  Report r = engine.check_structure(cfg.n);
  r.title = "shift";
  std::erase_if(r.assertions, [](const Assertion& a) {
    return a.anchor.find("cone membership") != std::string::npos;
  });
  return r;
}

Report cone_suite(const SuiteConfig& cfg, RecurrenceEngine& engine) {
  Report r{"cone", {}};
  for (int n = 0; n <= cfg.n; ++n) {
    for (int j : {0, 1}) {
      Assertion a;
      a.name = "M_{" + std::to_string(n) + "," + std::to_string(j) + "} in R(" +
               std::to_string(witness_center(n, j)) + ") with exact recomposition";
      a.anchor = j == 0 ? "leading cone membership" : "penultimate cone membership";
      try {
        const ConeCertificate cert = certify_cone(engine, n, j);
        a.passed = is_valid(cert);
        if (!a.passed) a.witness = "certificate failed validation";
      } catch (const ConeViolation& e) {
        a.passed = false;
        a.witness = e.what();
      }
      r.add(std::move(a));
    }
  }
  return r;
}

Report positivity_suite(const SuiteConfig& cfg, RecurrenceEngine& engine) {
  Report r{"positivity", {}};
  const CertificateSet set = certify_all(engine, cfg.n);
  for (const PositivityCertificate& c : set.positivity) {
    Assertion a;
    a.name = "L(e(" + std::to_string(c.n) + "," + std::to_string(c.i) + "," + std::to_string(c.j) +
             ")) in CH2+";
    a.anchor = "positivity corollary";
    a.passed = is_valid(c);
    if (!a.passed) {
      for (const auto& [idx, coeff] : c.coefficients) {
        if (sgn(coeff) < 0) {
          a.witness = "coefficient of h[" + std::to_string(idx) + "] is " + to_decimal(coeff);
          break;
        }
      }
    }
    r.add(std::move(a));
  }
  Assertion implication;
  implication.name = "cone certificate with c >= 0 implies positivity certificate";
  implication.anchor = "positivity from the cone";
  implication.passed = set.implication_failures.empty();
  if (!implication.passed) {
    const auto [n, j] = set.implication_failures.front();
    implication.witness = args({{"n", n}, {"j", j}});
  }
  r.add(std::move(implication));
  return r;
}

Report cross_suite(const SuiteConfig& cfg) {
  Report r{"cross", {}};
  sampling::Rng rng(cfg.seed);
  Tally t;
  for (int k = 0; k < cfg.trials; ++k) {
    const TildeElement g1 = sampling::random_tilde(rng);
    const TildeElement g2 = sampling::random_tilde(rng);
    t.check(cross_check(g1, g2), weight_of(g1) + weight_of(g2),
            [&] { return "g1=" + to_string(g1) + "; g2=" + to_string(g2); });
  }
  r.add(t.finish("eval(g1 g2) = eval(g1) eval(g2), random pairs", "evaluation is multiplicative"));
  return r;
}

// Identities recomputed entirely in the Laurent algebra, plus invariants of
// the evaluated engine output.
Report oracle_suite(const SuiteConfig& cfg, RecurrenceEngine& engine) {
  Report r{"oracle", {}};
  const auto u = [](std::int64_t i) { return eval_basis(i); };
  const std::int64_t n = std::max(cfg.n, 0);

  Tally t11, t1m1;
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      const auto weight = static_cast<std::size_t>(std::abs(a) + std::abs(b));
      const auto who = [&] { return args({{"A", a}, {"B", b}}); };
      t11.check(lmul(u(a), u(b)) - lmul(u(a - 1), u(b - 1)) == u(a + b), weight, who);
      t1m1.check(lmul(u(a), u(b)) - lmul(u(a - 1), u(b + 1)) == u(b - a), weight, who);
    }
  }
  r.add(t11.finish("U_A U_B - U_{A-1} U_{B-1} = U_{A+B}", "two-factor product rule, evaluated"));
  r.add(t1m1.finish("U_A U_B - U_{A-1} U_{B+1} = U_{B-A}", "two-factor product rule, evaluated"));

  const std::int64_t m = std::max<std::int64_t>(n - 2, 0);
  Tally thbaa, thaba;
  for (std::int64_t b = -m; b <= m; ++b) {
    for (std::int64_t a1 = -m; a1 <= m; ++a1) {
      for (std::int64_t a2 = -m; a2 <= m; ++a2) {
        const auto weight = static_cast<std::size_t>(std::abs(b) + std::abs(a1) + std::abs(a2));
        const auto who = [&] { return args({{"A1", a1}, {"A2", a2}, {"B", b}}); };
        thbaa.check(lmul(u(b), lmul(u(a1), u(a2))) - lmul(u(b), lmul(u(a1 - 1), u(a2 - 1))) ==
                        lmul(u(b), u(a1 + a2)),
                    weight, who);
        const LaurentPoly lhs = lmul(lmul(u(a1), u(b)), u(a2 - 1)) +
                                lmul(lmul(u(a1 - 1), u(b)), u(a2)) -
                                lmul(lmul(lmul(u(a1 - 1), u(1)), u(b)), u(a2 - 1));
        thaba.check(lhs == lmul(u(b), u(a1 + a2 - 1)), weight, who);
      }
    }
  }
  r.add(thbaa.finish("three-factor rule (sum), evaluated", "three-factor product rule, evaluated"));
  r.add(thaba.finish("three-factor rule (mixed), evaluated", "three-factor product rule, evaluated"));

  sampling::Rng rng(cfg.seed);
  Tally tw;
  for (int k = 0; k < cfg.trials; ++k) {
    const TildeElement g1 = sampling::random_tilde(rng);
    const TildeElement g2 = sampling::random_tilde(rng);
    const TildeElement g3 = sampling::random_tilde(rng);
    const LaurentPoly e1 = eval(g1), e2 = eval(g2), e3 = eval(g3);
    const LaurentPoly s1 = eval(shift(g1, -1)), s3 = eval(shift(g3, -1));
    const LaurentPoly oracle_w0 = lmul(e2, lmul(e1, e3) - lmul(s1, s3));
    const LaurentPoly oracle_w1 = lmul(s1, lmul(e2, e3)) + lmul(e1, lmul(e2, s3)) -
                                  lmul(s1, lmul(u(1), lmul(e2, s3)));
    const TildeElement kernel_w0 = w0(g1, g2, g3);
    tw.check(oracle_w0 == eval(kernel_w0) && oracle_w1 == eval(shift(kernel_w0, -1)),
             weight_of(g1) + weight_of(g2) + weight_of(g3), [&] {
               return "g1=" + to_string(g1) + "; g2=" + to_string(g2) + "; g3=" + to_string(g3);
             });
  }
  r.add(tw.finish("W0 and W1 = S_-1 W0 recomputed in the Laurent algebra",
                  "W1 is the shifted W0, evaluated"));

  Tally tpal, tone;
  for (int depth = 0; depth <= n; ++depth) {
    for (int j : {0, 1}) {
      for (int i : {-1, 0, 1}) {
        const LaurentPoly p = eval(engine.raw(depth, i, j));
        tpal.check(is_palindromic(p), static_cast<std::size_t>(depth),
                   [&] { return args({{"n", depth}, {"i", i}, {"j", j}}); });
      }
    }
    const TildeElement& e = engine.e0_raw(depth, 0);
    BigInt weighted = 0;
    for (const auto& [j, c] : e.coeffs()) weighted += c * BigInt(j + 1);
    tone.check(evaluate_at_one(eval(e)) == weighted, static_cast<std::size_t>(depth),
               [&] { return args({{"n", depth}}); });
  }
  r.add(tpal.finish("eval(e(n,i,j)) invariant under t -> 1/t", "palindromic evaluation"));
  r.add(tone.finish("eval(e(n,0,0))(1) = sum_j c_j (j+1)", "evaluation at t = 1"));

  Tally tmax;
  for (int depth = 1; depth <= n; ++depth) {
    const IntegerMultiset m0 = engine.e0_closed(depth).multiset;
    std::int64_t expected = 2;
    for (int k = 0; k < depth; ++k) expected *= 3;
    tmax.check(!m0.empty() && m0.max() == expected, static_cast<std::size_t>(depth), [&] {
      return args({{"n", depth}, {"expected", expected}, {"got", m0.empty() ? 0 : m0.max()}});
    });
  }
  r.add(tmax.finish("max(M_n0) = 2 * 3^n", "max-index law"));
  return r;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite_name(std::string_view name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

Report run_suite(std::string_view name, const SuiteConfig& config, RecurrenceEngine& engine) {
  if (name == "lemmas") return lemmas_suite(config);
  if (name == "w-theorem") return w_theorem_suite(config);
  if (name == "multiset") return multiset_suite(config);
  if (name == "cone") return cone_suite(config, engine);
  if (name == "shift") return shift_suite(config, engine);
  if (name == "positivity") return positivity_suite(config, engine);
  if (name == "cross") return cross_suite(config);
  if (name == "oracle") return oracle_suite(config, engine);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace chtilde
