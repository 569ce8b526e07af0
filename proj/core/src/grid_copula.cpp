#include "copgeo/grid_copula.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "copgeo/error.hpp"

namespace copgeo {

GridCopula::GridCopula(std::size_t n, std::vector<double> mass, double tol) : n_(n), mass_(std::move(mass)) {
  if (n_ == 0) throw Error(ErrorCode::ResolutionZero, "grid resolution must be at least 1");
  if (mass_.size() != n_ * n_)
    throw Error(ErrorCode::InvalidGrid, "expected " + std::to_string(n_ * n_) + " masses, got " +
                                            std::to_string(mass_.size()));
  const double margin = 1.0 / static_cast<double>(n_);
  std::vector<double> col(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const double m = mass_[i * n_ + j];
      if (!(m >= 0)) throw Error(ErrorCode::InvalidGrid, "negative or NaN mass at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      row += m;
      col[j] += m;
    }
    if (std::abs(row - margin) > tol)
      throw Error(ErrorCode::InvalidGrid, "row " + std::to_string(i) + " sums to " + std::to_string(row));
  }
  for (std::size_t j = 0; j < n_; ++j)
    if (std::abs(col[j] - margin) > tol)
      throw Error(ErrorCode::InvalidGrid, "column " + std::to_string(j) + " sums to " + std::to_string(col[j]));

  corners_.assign((n_ + 1) * (n_ + 1), 0.0);
  for (std::size_t i = 1; i <= n_; ++i) {
    double running = 0;
    for (std::size_t j = 1; j <= n_; ++j) {
      running += mass_[(i - 1) * n_ + (j - 1)];
      corners_[i * (n_ + 1) + j] = corners_[(i - 1) * (n_ + 1) + j] + running;
    }
  }
}

GridCopula GridCopula::from_rows(const std::vector<std::vector<double>>& rows, double tol) {
  const std::size_t n = rows.size();
  std::vector<double> mass;
  mass.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::InvalidGrid, "mass matrix must be square");
    mass.insert(mass.end(), r.begin(), r.end());
  }
  return GridCopula(n, std::move(mass), tol);
}

GridCopula GridCopula::independence(std::size_t n) {
  const double m = 1.0 / static_cast<double>(n * n);
  return GridCopula(n, std::vector<double>(n * n, m));
}

GridCopula GridCopula::diagonal(std::size_t n) {
  std::vector<double> mass(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) mass[i * n + i] = 1.0 / static_cast<double>(n);
  return GridCopula(n, std::move(mass));
}

GridCopula GridCopula::anti_diagonal(std::size_t n) {
  std::vector<double> mass(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) mass[i * n + (n - 1 - i)] = 1.0 / static_cast<double>(n);
  return GridCopula(n, std::move(mass));
}

namespace {

// Cell index and local coordinate in [0,1] of a point in [0,1].
std::pair<std::size_t, double> locate(double x, std::size_t n) {
  const double scaled = std::clamp(x, 0.0, 1.0) * static_cast<double>(n);
  auto i = static_cast<std::size_t>(scaled);
  if (i >= n) i = n - 1;
  return {i, scaled - static_cast<double>(i)};
}

}  // namespace

double GridCopula::cdf(double x, double y) const {
  const auto [i, u] = locate(x, n_);
  const auto [j, v] = locate(y, n_);
  const double c00 = corner(i, j);
  const double below = corner(i + 1, j) - c00;  // mass of x-cell i under y = j/n
  const double left = corner(i, j + 1) - c00;   // mass of y-cell j left of x = i/n
  return c00 + u * below + v * left + u * v * mass(i, j);
}

double GridCopula::kernel_x(double x, double y) const {
  const auto [i, u] = locate(x, n_);
  const auto [j, v] = locate(y, n_);
  (void)u;
  const double below = corner(i + 1, j) - corner(i, j);
  return static_cast<double>(n_) * (below + v * mass(i, j));
}

double GridCopula::kernel_y(double x, double y) const {
  const auto [i, u] = locate(x, n_);
  const auto [j, v] = locate(y, n_);
  (void)v;
  const double left = corner(i, j + 1) - corner(i, j);
  return static_cast<double>(n_) * (left + u * mass(i, j));
}

GridCopula GridCopula::transposed() const {
  std::vector<double> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = mass_[i * n_ + j];
  return GridCopula(n_, std::move(t));
}

std::vector<Rational> shuffle_cell_masses(const IntervalExchange& h, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ResolutionZero, "grid resolution must be at least 1");
  std::vector<Rational> mass(n * n, Rational(0));
  const Rational step(1UL, static_cast<unsigned long>(n));
  const Rational scale(static_cast<unsigned long>(n));

  // Walk each graph segment, cutting it at every x- and y-cell boundary.
  for (const auto& p : h.pieces()) {
    Rational cur = p.start;
    while (cur < p.end) {
      Rational next = Rational(floor(cur * scale) + 1) * step;
      if (p.end < next) next = p.end;
      const Rational y = p.apply(cur);
      if (p.orientation > 0) {
        const Rational boundary = Rational(floor(y * scale) + 1) * step;
        const Rational cross = cur + (boundary - y);
        if (cross < next) next = cross;
      } else {
        const Rational boundary = Rational(ceil(y * scale) - 1) * step;
        const Rational cross = cur + (y - boundary);
        if (cross < next) next = cross;
      }
      const Rational mid = (cur + next) / 2;
      const auto i = static_cast<std::size_t>(floor(mid * scale).get_ui());
      const auto j = static_cast<std::size_t>(floor(p.apply(mid) * scale).get_ui());
      mass[i * n + j] += next - cur;
      cur = next;
    }
  }
  return mass;
}

GridCopula grid_from_shuffle(const IntervalExchange& h, std::size_t n) {
  const auto exact = shuffle_cell_masses(h, n);
  std::vector<double> mass(exact.size());
  std::transform(exact.begin(), exact.end(), mass.begin(), [](const Rational& q) { return q.get_d(); });
  return GridCopula(n, std::move(mass));
}

}  // namespace copgeo
