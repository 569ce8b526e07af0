#include <gtest/gtest.h>

#include "copgeo/error.hpp"
#include "copgeo/grid_copula.hpp"
#include "helpers.hpp"

namespace copgeo {
namespace {

using testing::q;

ErrorCode grid_error(std::size_t n, std::vector<double> mass) {
  try {
    GridCopula g(n, std::move(mass));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "grid accepted";
  return ErrorCode::ParseError;
}

TEST(GridCopula, Validation) {
  EXPECT_EQ(grid_error(0, {}), ErrorCode::ResolutionZero);
  EXPECT_EQ(grid_error(2, {0.5, 0.5}), ErrorCode::InvalidGrid);
  EXPECT_EQ(grid_error(2, {0.75, -0.25, -0.25, 0.75}), ErrorCode::InvalidGrid);
  EXPECT_EQ(grid_error(2, {0.5, 0.0, 0.25, 0.25}), ErrorCode::InvalidGrid);
  EXPECT_NO_THROW(GridCopula(2, {0.25, 0.25, 0.25, 0.25}));
  try {
    GridCopula::from_rows({{0.5, 0.0}, {0.5}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGrid);
  }
}

TEST(GridCopula, CdfIsBilinearInterpolationOfCorners) {
  const auto g = GridCopula::diagonal(2);
  EXPECT_DOUBLE_EQ(g.cdf(0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(g.cdf(1, 1), 1);
  EXPECT_DOUBLE_EQ(g.cdf(0.25, 0.25), 0.125);
  EXPECT_DOUBLE_EQ(g.cdf(0.25, 1), 0.25);
  EXPECT_DOUBLE_EQ(g.cdf(0.75, 0.5), 0.5);
  const auto pi = GridCopula::independence(5);
  for (double x : {0.0, 0.13, 0.5, 0.91})
    for (double y : {0.0, 0.33, 0.77, 1.0}) EXPECT_NEAR(pi.cdf(x, y), x * y, 1e-15);
}

TEST(GridCopula, TransposeSwapsArguments) {
  std::mt19937_64 rng(3);
  const auto g = testing::random_grid(rng, 6);
  const auto t = g.transposed();
  for (double x : {0.1, 0.45, 0.8})
    for (double y : {0.2, 0.5, 0.95}) EXPECT_NEAR(g.cdf(x, y), t.cdf(y, x), 1e-15);
}

TEST(GridCopula, KernelsAreConditionalDistributions) {
  const auto g = GridCopula::diagonal(4);
  // In cell (1,1) the density is uniform, so K(x,[0,y]) rises linearly.
  EXPECT_NEAR(g.kernel_x(0.3, 0.25), 0.0, 1e-15);
  EXPECT_NEAR(g.kernel_x(0.3, 0.375), 0.5, 1e-15);
  EXPECT_NEAR(g.kernel_x(0.3, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(g.kernel_y(0.375, 0.3), 0.5, 1e-15);
}

TEST(GridCopula, ShuffleMassesOfBasicShuffles) {
  const auto id = shuffle_cell_masses(IntervalExchange::identity(), 2);
  EXPECT_EQ(id, (std::vector<Rational>{q("1/2"), 0, 0, q("1/2")}));
  const auto swap = shuffle_cell_masses(shuffle_from_permutation(Permutation({2, 1})), 2);
  EXPECT_EQ(swap, (std::vector<Rational>{0, q("1/2"), q("1/2"), 0}));
  const Permutation p({1, 3, 2});
  const auto m = shuffle_cell_masses(shuffle_from_permutation(p), 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m[i * 3 + j], p(i + 1) == j + 1 ? q("1/3") : Rational(0));
  try {
    grid_from_shuffle(IntervalExchange::identity(), 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionZero);
  }
}

TEST(GridCopula, ShuffleMassesMatchCdfDifferencesExactly) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testing::random_exchange(rng, 1 + uniform_index(rng, 7), 30);
    const std::size_t n = 1 + uniform_index(rng, 9);
    const auto m = shuffle_cell_masses(h, n);
    const Rational cell = testing::frac(1, n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += m[i * n + j];
        col += m[j * n + i];
        const Rational x0 = cell * static_cast<unsigned long>(i), x1 = x0 + cell;
        const Rational y0 = cell * static_cast<unsigned long>(j), y1 = y0 + cell;
        const Rational expect = evaluate_cdf(h, x1, y1) - evaluate_cdf(h, x0, y1) - evaluate_cdf(h, x1, y0) +
                                evaluate_cdf(h, x0, y0);
        EXPECT_EQ(m[i * n + j], expect);
      }
      EXPECT_EQ(row, cell);
      EXPECT_EQ(col, cell);
    }
  }
}

}  // namespace
}  // namespace copgeo
