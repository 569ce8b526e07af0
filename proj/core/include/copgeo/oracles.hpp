#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "copgeo/grid_copula.hpp"
#include "copgeo/interval_exchange.hpp"
#include "copgeo/permutation.hpp"

namespace copgeo {

/// Smallest sample count accepted by the Monte Carlo estimators.
inline constexpr std::size_t kMinMonteCarloSamples = 10'000;

/// Number of independent RNG streams a Monte Carlo run is split into. Stream
/// k is a std::mt19937_64 seeded with seed_seq{seed, k}; the split is fixed,
/// so results do not depend on the worker count.
inline constexpr std::size_t kMonteCarloStreams = 64;

struct McEstimate {
  double estimate = 0;
  double std_error = 0;
};

/// Average of sign((x1 - x2)(h(x1) - h(x2))) over uniform pairs.
/// Standard error sqrt((1 - t^2) / samples). Throws OutOfRange below
/// kMinMonteCarloSamples.
McEstimate mc_kendall_tau(const IntervalExchange& h, std::size_t samples, std::uint64_t seed);

/// Fraction of uniform points with h(x) <= y and h^{-1}(y) <= x.
McEstimate mc_omega_area(const IntervalExchange& h, std::size_t samples, std::uint64_t seed);

/// 4 * integral of C dC - 1 summed cell by cell: inside a cell the CDF is the
/// bilinear interpolant of its corners and the density is constant, so each
/// cell contributes its mass times the mean of its four corner values.
/// Throws ResolutionTooHigh for n > 256.
double brute_force_tau_checkerboard(const GridCopula& c);

/// Integral of f over the unit square by nested adaptive Gauss-Kronrod
/// quadrature. Throws NoConvergence when the error estimate exceeds `tol`.
double quad2d_reference(const std::function<double(double, double)>& f, double tol);

/// O(n^2) inversion count.
std::uint64_t inversion_count_quadratic(const Permutation& p);

/// Sum of sign((x_i - x_j)(y_i - y_j)) over ordered pairs i != j, divided by
/// n(n - 1).
double kendall_tau_pairwise(std::span<const std::pair<double, double>> sample);

}  // namespace copgeo
