#include "chtilde/recurrence_engine.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "support/helpers.hpp"
#include "support/oracle.hpp"

namespace {

using namespace chtilde;
using testing_helpers::tilde;

TildeElement h(std::int64_t j) { return basis(j); }

// The two recurrences restated on Laurent coefficient vectors, with every
// product taken through the reference oracle.
struct ReferenceFamilies {
  struct Triple {
    oracle::Poly zero, plus, minus;
  };
  std::vector<Triple> lead;
  std::vector<Triple> pen;

  explicit ReferenceFamilies(int n_max) {
    using oracle::plus;
    using oracle::product;
    using oracle::sub;
    const oracle::Poly h1{{1, 1}};
    const auto m = [](const oracle::Poly& a, const oracle::Poly& b) { return product(a, b); };
    const auto scaled = [](oracle::Poly p, oracle::Int k) {
      for (auto& [e, c] : p) c *= k;
      return p;
    };
    const auto w0 = [&](const oracle::Poly& g1, const oracle::Poly& g2, const oracle::Poly& g3) {
      return m(g2, sub(m(g1, g3), m(oracle::shift(g1, -1), oracle::shift(g3, -1))));
    };
    const auto w1 = [&](const oracle::Poly& g1, const oracle::Poly& g2, const oracle::Poly& g3) {
      const auto s1 = oracle::shift(g1, -1);
      const auto s3 = oracle::shift(g3, -1);
      return sub(plus(m(s1, m(g2, g3)), m(g1, m(g2, s3))), m(s1, m(h1, m(g2, s3))));
    };

    lead.push_back({{{2, 1}}, {{1, 1}}, {{1, 1}}});
    pen.push_back({{}, {}, {{0, 1}}});
    for (int n = 0; n < n_max; ++n) {
      const auto [a, b, d] = lead[n];
      Triple next;
      next.zero = m(a, sub(m(a, a), m(b, b)));
      next.plus = sub(plus(m(b, m(a, a)), m(a, m(a, b))), m(b, m(h1, m(a, b))));
      next.minus = plus(next.plus, m(d, m(d, sub(d, b))));
      lead.push_back(next);

      const auto [p, q, r] = pen[n];
      const auto s = oracle::shift(a, -1);
      const auto ps = plus(p, s);
      Triple pn;
      pn.zero = plus(plus(w0(a, a, ps), w0(a, p, a)), w0(p, a, a));
      pn.plus = plus(plus(w1(a, a, ps), w1(a, p, a)), w1(p, a, a));
      auto minus = plus(w1(a, a, ps), w1(a, p, a));
      minus = plus(minus, m(r, m(a, a)));
      minus = plus(minus, m(p, m(a, s)));
      minus = sub(minus, m(r, m(h1, m(a, s))));
      minus = plus(minus, scaled(m(s, m(a, s)), 2));
      minus = sub(minus, m(s, m(h1, m(s, s))));
      minus = plus(minus, m(s, m(sub(r, q), s)));
      pn.minus = minus;
      pen.push_back(pn);
    }
  }
};

TEST(Recurrence, LeadingExamples) {
  RecurrenceEngine engine;
  EXPECT_EQ(engine.e0_raw(0, 0), h(2));
  EXPECT_EQ(engine.e0_raw(0, 1), h(1));
  EXPECT_EQ(engine.e0_raw(0, -1), h(1));
  EXPECT_EQ(engine.e0_raw(1, 0), h(2) + h(4) + h(6));
  EXPECT_EQ(engine.e0_raw(1, 1), h(1) + h(3) + h(5));
}

TEST(Recurrence, PenultimateExamples) {
  RecurrenceEngine engine;
  EXPECT_TRUE(engine.e1_raw(0, 0).is_zero());
  EXPECT_TRUE(engine.e1_raw(0, 1).is_zero());
  EXPECT_EQ(engine.e1_raw(0, -1), h(0));
  EXPECT_EQ(engine.e1_raw(1, 0), h(1) + h(3) + h(5));
  EXPECT_EQ(engine.e1_raw(1, -1), tilde({{0, 2}, {2, 2}, {4, 2}}));
}

TEST(Recurrence, ClosedWitnessExamples) {
  RecurrenceEngine engine;
  EXPECT_EQ(engine.e0_closed(0).multiset, (IntegerMultiset{2}));
  EXPECT_EQ(engine.e0_closed(1).multiset, (IntegerMultiset{2, 4, 6}));
  EXPECT_TRUE(engine.e1_closed(0).multiset.empty());
  EXPECT_EQ(engine.e1_closed(1).multiset, (IntegerMultiset{1, 3, 5}));
  EXPECT_TRUE(in_cone(engine.e1_closed(1).multiset, 3));

  const IntegerMultiset& m20 = engine.e0_closed(2).multiset;
  EXPECT_EQ(m20.max(), 18);
  EXPECT_TRUE(in_cone(m20, 8));
  EXPECT_TRUE(in_cone(engine.e1_closed(2).multiset, 7));
}

TEST(Recurrence, RawMatchesReferenceRecurrence) {
  const ReferenceFamilies ref(3);
  RecurrenceEngine engine;
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(engine.e0_raw(n, 0), oracle::unphi(ref.lead[n].zero)) << n;
    EXPECT_EQ(engine.e0_raw(n, 1), oracle::unphi(ref.lead[n].plus)) << n;
    EXPECT_EQ(engine.e0_raw(n, -1), oracle::unphi(ref.lead[n].minus)) << n;
    EXPECT_EQ(engine.e1_raw(n, 0), oracle::unphi(ref.pen[n].zero)) << n;
    EXPECT_EQ(engine.e1_raw(n, 1), oracle::unphi(ref.pen[n].plus)) << n;
    EXPECT_EQ(engine.e1_raw(n, -1), oracle::unphi(ref.pen[n].minus)) << n;
  }
}

TEST(Recurrence, ClosedEqualsRawAllIndices) {
  RecurrenceEngine engine;
  for (int n = 0; n <= 3; ++n) {
    for (int i = -1; i <= 1; ++i) {
      for (int j = 0; j <= 1; ++j) EXPECT_EQ(engine.closed(n, i, j), engine.raw(n, i, j));
    }
  }
}

TEST(Recurrence, LeadingStepIsW0OrW1OfRepeatedArgument) {
  RecurrenceEngine engine;
  for (int n = 0; n <= 3; ++n) {
    const TildeElement& g = engine.e0_raw(n, 0);
    EXPECT_EQ(engine.e0_raw(n + 1, 0), w0(g, g, g));
    EXPECT_EQ(engine.e0_raw(n + 1, 1), w1(g, g, g));
  }
}

TEST(Recurrence, ExtraTermVanishes) {
  RecurrenceEngine engine;
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(engine.leading_minus_extra_term(n).is_zero()) << n;
}

TEST(Recurrence, CheckStructureSmallDepths) {
  for (int n_max : {0, 1, 2}) {
    RecurrenceEngine engine;
    const Report report = engine.check_structure(n_max);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.assertions.size(), static_cast<std::size_t>(9 * (n_max + 1)));
    for (const Assertion& a : report.assertions) EXPECT_TRUE(a.passed) << a.name << ": " << a.witness;
  }
}

TEST(Recurrence, GrowthStats) {
  RecurrenceEngine engine;
  GrowthStats s = engine.growth_stats(1, 0);
  EXPECT_EQ(s.max_index, 6);
  EXPECT_EQ(s.support_size, 3u);
  s = engine.growth_stats(2, 0);
  EXPECT_EQ(s.max_index, 18);
  EXPECT_EQ(s.min_index, -2);
  EXPECT_EQ(s.support_size, 11u);
  EXPECT_EQ(s.mass, 135);
  s = engine.growth_stats(2, 1);
  EXPECT_EQ(s.max_index, 17);
  EXPECT_EQ(s.mass, 513);
  s = engine.growth_stats(0, 1);
  EXPECT_EQ(s.support_size, 0u);
  EXPECT_EQ(s.mass, 0);
  EXPECT_FALSE(s.max_index.has_value());
}

TEST(Recurrence, WitnessCenters) {
  EXPECT_EQ(witness_center(0, 0), 2);
  EXPECT_EQ(witness_center(2, 0), 8);
  EXPECT_EQ(witness_center(2, 1), 7);
  EXPECT_THROW(witness_center(-1, 0), std::invalid_argument);
}

TEST(Recurrence, LeftExpand) {
  // L(h~2) acting on h~4 is [-2,2] + {4}.
  EXPECT_EQ(left_expand(IntegerMultiset{2}, IntegerMultiset{4}), (IntegerMultiset{2, 4, 6}));
  EXPECT_TRUE(left_expand(IntegerMultiset{-1}, IntegerMultiset{4}).empty());
  EXPECT_THROW(left_expand(IntegerMultiset{-3}, IntegerMultiset{0}), std::domain_error);
}

TEST(Recurrence, InvalidArguments) {
  RecurrenceEngine engine;
  EXPECT_THROW(engine.raw(-1, 0, 0), std::invalid_argument);
  EXPECT_THROW(engine.raw(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(engine.raw(1, 0, 2), std::invalid_argument);
  EXPECT_THROW(engine.closed(0, -2, 1), std::invalid_argument);
  EXPECT_THROW(engine.check_structure(-1), std::invalid_argument);
}

TEST(Recurrence, ConcurrentReadersAgree) {
  RecurrenceEngine shared;
  RecurrenceEngine reference;
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      const int j = t % 2;
      const int i = t % 3 - 1;
      ok[t] = shared.raw(3, i, j) == shared.closed(3, i, j) ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) {
    EXPECT_EQ(ok[t], 1);
    EXPECT_EQ(shared.raw(3, t % 3 - 1, t % 2), reference.raw(3, t % 3 - 1, t % 2));
  }
}

}  // namespace
