#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "copgeo/grid_copula.hpp"
#include "copgeo/interval_exchange.hpp"
#include "copgeo/permutation.hpp"
#include "copgeo/rational.hpp"

namespace copgeo::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Rational frac(unsigned long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Interval exchange with `pieces` pieces on the lattice 1/denominator, a
/// random image order and random orientations.
inline IntervalExchange random_exchange(std::mt19937_64& rng, std::size_t pieces, unsigned long denominator,
                                        bool allow_flips = true) {
  std::set<unsigned long> cuts;
  while (cuts.size() < pieces - 1) cuts.insert(1 + uniform_index(rng, denominator - 1));
  std::vector<unsigned long> bounds{0};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(denominator);

  const Permutation order = Permutation::random(pieces, rng);
  std::vector<unsigned long> target(pieces);
  unsigned long acc = 0;
  for (std::size_t slot = 1; slot <= pieces; ++slot) {
    const std::size_t k = order(slot) - 1;
    target[k] = acc;
    acc += bounds[k + 1] - bounds[k];
  }
  std::vector<ExchangePiece> out;
  for (std::size_t k = 0; k < pieces; ++k) {
    ExchangePiece p;
    p.start = Rational(bounds[k], denominator);
    p.end = Rational(bounds[k + 1], denominator);
    p.target = Rational(target[k], denominator);
    p.start.canonicalize();
    p.end.canonicalize();
    p.target.canonicalize();
    p.orientation = allow_flips && uniform_index(rng, 2) == 0 ? -1 : 1;
    out.push_back(p);
  }
  return IntervalExchange(std::move(out));
}

/// Random doubly stochastic n x n grid: every other draw is a sparse convex
/// mixture of up to three permutation matrices, the rest come from Sinkhorn
/// balancing of strictly positive entries.
inline GridCopula random_grid(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  if (uniform_index(rng, 2) == 0) {
    const std::size_t parts = 1 + uniform_index(rng, 3);
    std::vector<double> w(parts);
    double total = 0;
    for (auto& v : w) total += v = 0.1 + uniform_unit(rng);
    for (std::size_t k = 0; k < parts; ++k) {
      const auto p = Permutation::random(n, rng);
      for (std::size_t i = 0; i < n; ++i) m[i * n + p(i + 1) - 1] += w[k] / total / static_cast<double>(n);
    }
    return GridCopula(n, std::move(m), 1e-12);
  }
  for (auto& v : m) v = 0.05 + uniform_unit(rng);
  for (int sweep = 0; sweep < 5000; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i * n + j];
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= s * static_cast<double>(n);
    }
    double worst = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) s += m[i * n + j];
      worst = std::max(worst, std::abs(s * static_cast<double>(n) - 1));
      for (std::size_t i = 0; i < n; ++i) m[i * n + j] /= s * static_cast<double>(n);
    }
    if (worst < 1e-15) break;
  }
  return GridCopula(n, std::move(m), 1e-12);
}

}  // namespace copgeo::testing
