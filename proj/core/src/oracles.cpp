#include "copgeo/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "copgeo/error.hpp"
#include "copgeo/parallel.hpp"

namespace copgeo {
namespace {

// Runs `draw(rng)` samples times across the fixed stream split and returns
// the sum of its results.
template <class Draw>
double sum_streams(std::size_t samples, std::uint64_t seed, Draw draw) {
  if (samples < kMinMonteCarloSamples)
    throw Error(ErrorCode::OutOfRange, "need at least " + std::to_string(kMinMonteCarloSamples) + " samples");
  std::vector<double> partial(kMonteCarloStreams, 0.0);
  parallel_for(kMonteCarloStreams, [&](std::size_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::mt19937_64 rng(seq);
    const std::size_t count = samples / kMonteCarloStreams + (stream < samples % kMonteCarloStreams ? 1 : 0);
    long long acc = 0;
    for (std::size_t s = 0; s < count; ++s) acc += draw(rng);
    partial[stream] = static_cast<double>(acc);
  });
  double total = 0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

McEstimate mc_kendall_tau(const IntervalExchange& h, std::size_t samples, std::uint64_t seed) {
  const double total = sum_streams(samples, seed, [&](std::mt19937_64& rng) -> int {
    const double x1 = uniform_unit(rng), x2 = uniform_unit(rng);
    const double prod = (x1 - x2) * (h.apply(x1) - h.apply(x2));
    return (prod > 0) - (prod < 0);
  });
  const double n = static_cast<double>(samples);
  const double t = total / n;
  return {t, std::sqrt(std::max(0.0, 1.0 - t * t) / n)};
}

McEstimate mc_omega_area(const IntervalExchange& h, std::size_t samples, std::uint64_t seed) {
  const double total = sum_streams(samples, seed, [&](std::mt19937_64& rng) -> int {
    const double x = uniform_unit(rng), y = uniform_unit(rng);
    return h.apply(x) <= y && h.apply_inverse(y) <= x ? 1 : 0;
  });
  const double n = static_cast<double>(samples);
  const double p = total / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

double brute_force_tau_checkerboard(const GridCopula& c) {
  const std::size_t n = c.n();
  if (n > 256) throw Error(ErrorCode::ResolutionTooHigh, "brute force is limited to n <= 256");
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double mean = (c.corner(i, j) + c.corner(i + 1, j) + c.corner(i, j + 1) + c.corner(i + 1, j + 1)) / 4;
      sum += c.mass(i, j) * mean;
    }
  return 4 * sum - 1;
}

double quad2d_reference(const std::function<double(double, double)>& f, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr unsigned kMaxDepth = 20;
  const double inner_tol = tol / 10;
  bool inner_failed = false;
  auto inner = [&](double x) {
    double err = 0;
    const double v =
        gauss_kronrod<double, 31>::integrate([&](double y) { return f(x, y); }, 0.0, 1.0, kMaxDepth, inner_tol, &err);
    if (!(err <= inner_tol) && !(err <= inner_tol * std::max(1.0, std::abs(v)))) inner_failed = true;
    return v;
  };
  double err = 0;
  const double value = gauss_kronrod<double, 31>::integrate(inner, 0.0, 1.0, kMaxDepth, inner_tol, &err);
  if (inner_failed || !(err <= tol) || !std::isfinite(value))
    throw Error(ErrorCode::NoConvergence, "quadrature did not reach tolerance " + std::to_string(tol));
  return value;
}

std::uint64_t inversion_count_quadratic(const Permutation& p) {
  std::uint64_t count = 0;
  for (std::size_t i = 1; i <= p.size(); ++i)
    for (std::size_t j = i + 1; j <= p.size(); ++j) count += p(i) > p(j) ? 1 : 0;
  return count;
}

double kendall_tau_pairwise(std::span<const std::pair<double, double>> sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw Error(ErrorCode::TooFewRows, "need at least two observations");
  long long sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double prod = (sample[i].first - sample[j].first) * (sample[i].second - sample[j].second);
      sum += (prod > 0) - (prod < 0);
    }
  return static_cast<double>(sum) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace copgeo
