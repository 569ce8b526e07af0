#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "copgeo/error.hpp"
#include "copgeo/permutation.hpp"

namespace copgeo {
namespace {

TEST(Permutation, ValidatesBijection) {
  EXPECT_NO_THROW(Permutation({1}));
  EXPECT_NO_THROW(Permutation({1, 3, 2}));
  for (auto bad : {std::vector<Permutation::value_type>{1, 1, 2}, {0, 1}, {1, 3}, {}}) {
    try {
      Permutation p(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DuplicateOrOutOfRange);
    }
  }
}

TEST(Permutation, ParseAndFormat) {
  const auto p = Permutation::parse("3, 1,4 ,2");
  EXPECT_EQ(p, Permutation({3, 1, 4, 2}));
  EXPECT_EQ(p.to_string(), "3,1,4,2");
  try {
    Permutation::parse("1,x");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  try {
    Permutation::parse("1,1");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateOrOutOfRange);
  }
}

TEST(Permutation, InverseAndIdentity) {
  const Permutation p({3, 1, 4, 2});
  EXPECT_EQ(p.inverse(), Permutation({2, 4, 1, 3}));
  EXPECT_EQ(p.inverse().inverse(), p);
  EXPECT_TRUE(Permutation::identity(5).is_identity());
  EXPECT_FALSE(p.is_identity());
  EXPECT_EQ(Permutation::reversal(3), Permutation({3, 2, 1}));
}

TEST(Permutation, RandomIsSeededAndRoughlyUniform) {
  std::mt19937_64 a(7), b(7);
  EXPECT_EQ(Permutation::random(20, a), Permutation::random(20, b));

  std::mt19937_64 rng(2024);
  std::map<std::string, int> counts;
  constexpr int kDraws = 60000;
  for (int k = 0; k < kDraws; ++k) ++counts[Permutation::random(3, rng).to_string()];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [perm, c] : counts) EXPECT_NEAR(c, kDraws / 6.0, 5 * std::sqrt(kDraws / 6.0)) << perm;
}

TEST(Permutation, UniformIndexStaysInRange) {
  std::mt19937_64 rng(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 1000ull, (1ull << 63) + 5}) {
    for (int k = 0; k < 1000; ++k) EXPECT_LT(uniform_index(rng, bound), bound);
  }
  for (int k = 0; k < 1000; ++k) {
    const double u = uniform_unit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace copgeo
