#include <gtest/gtest.h>

#include <cmath>

#include "copgeo/error.hpp"
#include "copgeo/interval_exchange.hpp"
#include "helpers.hpp"

namespace copgeo {
namespace {

using testing::q;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

// A_h(x, y) = lambda([0, x] intersected with h^{-1}([0, y])) by a midpoint sum.
double cdf_by_sampling(const IntervalExchange& h, double x, double y, int steps = 20000) {
  double acc = 0;
  const double dx = x / steps;
  for (int k = 0; k < steps; ++k)
    if (h.apply((k + 0.5) * dx) <= y) acc += dx;
  return acc;
}

TEST(IntervalExchange, ShuffleFromPermutationPieces) {
  const auto h = shuffle_from_permutation(Permutation({1, 3, 2}));
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h.pieces()[1].start, q("1/3"));
  EXPECT_EQ(h.pieces()[1].end, q("2/3"));
  EXPECT_EQ(h.pieces()[1].target, q("2/3"));
  EXPECT_TRUE(h.exact());

  const auto swap = shuffle_from_permutation(Permutation({2, 1}));
  EXPECT_EQ(swap.apply(q("1/4")), q("3/4"));
  EXPECT_EQ(swap.apply(q("3/4")), q("1/4"));
  EXPECT_DOUBLE_EQ(swap.apply(0.1), 0.6);

  const auto id = shuffle_from_permutation(Permutation::identity(2));
  EXPECT_EQ(id, IntervalExchange::identity());
}

TEST(IntervalExchange, RejectsNonPartitions) {
  auto make = [](std::vector<ExchangePiece> p) { return [p] { IntervalExchange h(p); }; };
  EXPECT_EQ(code_of(make({{q("0"), q("1/2"), q("0"), 1}})), ErrorCode::InvalidIntervalExchange);
  EXPECT_EQ(code_of(make({{q("0"), q("1/2"), q("0"), 1}, {q("1/2"), q("1"), q("1/4"), 1}})),
            ErrorCode::InvalidIntervalExchange);
  EXPECT_EQ(code_of(make({{q("0"), q("1/2"), q("0"), 1}, {q("1/3"), q("1"), q("1/2"), 1}})),
            ErrorCode::InvalidIntervalExchange);
  EXPECT_EQ(code_of(make({{q("0"), q("1"), q("0"), 2}})), ErrorCode::InvalidIntervalExchange);
  EXPECT_EQ(code_of(make({})), ErrorCode::InvalidIntervalExchange);
}

TEST(IntervalExchange, ReversalIsW) {
  const auto w = IntervalExchange::reversal();
  EXPECT_EQ(w.apply(q("1/5")), q("4/5"));
  EXPECT_EQ(invert(w), w);
  for (double x : {0.0, 0.2, 0.5, 0.9})
    for (double y : {0.0, 0.3, 0.5, 1.0}) EXPECT_NEAR(evaluate_cdf(w, x, y), std::max(x + y - 1, 0.0), 1e-15);
}

TEST(IntervalExchange, IdentityCdfIsMin) {
  const auto m = IntervalExchange::identity();
  for (double x : {0.0, 0.25, 0.6, 1.0})
    for (double y : {0.0, 0.3, 0.6, 1.0}) EXPECT_DOUBLE_EQ(evaluate_cdf(m, x, y), std::min(x, y));
}

TEST(IntervalExchange, CdfOfThreeStripShuffle) {
  const auto h = shuffle_from_permutation(Permutation({1, 3, 2}));
  EXPECT_EQ(evaluate_cdf(h, q("1/2"), q("1/2")), q("1/3"));
  EXPECT_EQ(evaluate_cdf(h, q("1"), q("2/5")), q("2/5"));
  EXPECT_EQ(evaluate_cdf(h, q("3/5"), q("1")), q("3/5"));
}

TEST(IntervalExchange, InvertComposesToIdentity) {
  const auto h = shuffle_from_permutation(Permutation({1, 3, 2}));
  EXPECT_EQ(invert(h), shuffle_from_permutation(Permutation({1, 3, 2})));
  const auto g = shuffle_from_permutation(Permutation({3, 1, 4, 2}));
  EXPECT_EQ(invert(g), shuffle_from_permutation(Permutation({3, 1, 4, 2}).inverse()));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = testing::random_exchange(rng, 1 + uniform_index(rng, 8), 48);
    const auto inv = invert(r);
    EXPECT_EQ(invert(inv), r);
    for (int k = 0; k < 20; ++k) {
      const Rational x = testing::frac(uniform_index(rng, 997), 997);
      EXPECT_EQ(inv.apply(r.apply(x)), x);
      EXPECT_EQ(r.apply_inverse(x), inv.apply(x));
    }
  }
}

TEST(IntervalExchange, NormalizedMergesContinuations) {
  const IntervalExchange split({{q("0"), q("1/3"), q("0"), 1}, {q("1/3"), q("1"), q("1/3"), 1}});
  EXPECT_EQ(split.normalized().size(), 1u);
  EXPECT_EQ(split, IntervalExchange::identity());
  const IntervalExchange flipped({{q("0"), q("1/2"), q("1/2"), -1}, {q("1/2"), q("1"), q("0"), -1}});
  EXPECT_EQ(flipped, IntervalExchange::reversal());
}

TEST(IntervalExchange, FromRealSnapsWithinTolerance) {
  const double third = 1.0 / 3.0;
  const std::vector<RealPiece> pieces{{0, third, 0, 1}, {third, 2 * third, 2 * third, 1}, {2 * third, 1, third, 1}};
  const auto h = IntervalExchange::from_real(pieces);
  EXPECT_FALSE(h.exact());
  EXPECT_NEAR(h.apply(0.5), 0.5 + third, 1e-12);
  const std::vector<RealPiece> gap{{0, 0.5, 0, 1}, {0.5001, 1, 0.5, 1}};
  EXPECT_EQ(code_of([&] { IntervalExchange::from_real(gap); }), ErrorCode::InvalidIntervalExchange);
}

TEST(IntervalExchange, CdfProperties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const auto h = testing::random_exchange(rng, 2 + uniform_index(rng, 6), 36);
    for (int k = 0; k < 128; ++k) {
      const double x = uniform_unit(rng), y = uniform_unit(rng);
      const double c = evaluate_cdf(h, x, y);
      EXPECT_GE(c, std::max(x + y - 1, 0.0) - 1e-15);
      EXPECT_LE(c, std::min(x, y) + 1e-15);
      const double x2 = uniform_unit(rng), y2 = uniform_unit(rng);
      EXPECT_LE(std::abs(evaluate_cdf(h, x2, y) - c), std::abs(x2 - x) + 1e-15);
      EXPECT_LE(std::abs(evaluate_cdf(h, x, y2) - c), std::abs(y2 - y) + 1e-15);
    }
    for (double x : {0.0, 0.3, 0.77, 1.0}) {
      EXPECT_NEAR(evaluate_cdf(h, x, 0.0), 0.0, 1e-15);
      EXPECT_NEAR(evaluate_cdf(h, x, 1.0), x, 1e-15);
      EXPECT_NEAR(evaluate_cdf(h, 1.0, x), x, 1e-15);
    }
    for (int k = 0; k < 5; ++k) {
      const double x = uniform_unit(rng), y = uniform_unit(rng);
      EXPECT_NEAR(evaluate_cdf(h, x, y), cdf_by_sampling(h, x, y), 1e-3);
    }
  }
}

TEST(IntervalExchange, ExactAndRealCdfAgree) {
  std::mt19937_64 rng(5);
  const auto h = testing::random_exchange(rng, 7, 120);
  for (int k = 0; k < 100; ++k) {
    const Rational x = testing::frac(uniform_index(rng, 241), 240);
    const Rational y = testing::frac(uniform_index(rng, 241), 240);
    EXPECT_NEAR(evaluate_cdf(h, x, y).get_d(), evaluate_cdf(h, x.get_d(), y.get_d()), 1e-15);
  }
}

}  // namespace
}  // namespace copgeo
