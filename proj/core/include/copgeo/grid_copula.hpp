#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copgeo/interval_exchange.hpp"
#include "copgeo/rational.hpp"

namespace copgeo {

/// Largest checkerboard resolution any operation will allocate.
inline constexpr std::size_t kGridCap = 4096;

/// Checkerboard copula: an n x n matrix of cell masses whose rows and columns
/// each sum to 1/n. Row index i is the x-cell [i/n,(i+1)/n), column index j the
/// y-cell. Within a cell the density is constant, so the CDF is bilinear there.
class GridCopula {
 public:
  /// `mass` is row-major, n*n entries. Throws ResolutionZero for n == 0 and
  /// InvalidGrid when the shape, signs or margins are off by more than `tol`.
  GridCopula(std::size_t n, std::vector<double> mass, double tol = 1e-12);

  static GridCopula from_rows(const std::vector<std::vector<double>>& rows, double tol = 1e-12);

  static GridCopula independence(std::size_t n);
  static GridCopula diagonal(std::size_t n);
  static GridCopula anti_diagonal(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  double mass(std::size_t i, std::size_t j) const { return mass_[i * n_ + j]; }
  std::span<const double> masses() const noexcept { return mass_; }

  /// C(i/n, j/n), 0 <= i, j <= n.
  double corner(std::size_t i, std::size_t j) const { return corners_[i * (n_ + 1) + j]; }

  double cdf(double x, double y) const;

  /// dC/dx at (x, y): the Markov kernel K_A(x, [0, y]).
  double kernel_x(double x, double y) const;
  /// dC/dy at (x, y): the kernel of the transpose, K_{A^t}(y, [0, x]).
  double kernel_y(double x, double y) const;

  GridCopula transposed() const;

 private:
  std::size_t n_;
  std::vector<double> mass_;
  std::vector<double> corners_;
};

/// Exact cell masses mu_{A_h}([i/n,(i+1)/n) x [j/n,(j+1)/n)), row-major.
/// Throws ResolutionZero for n == 0.
std::vector<Rational> shuffle_cell_masses(const IntervalExchange& h, std::size_t n);

/// Checkerboard aggregation of mu_{A_h} at resolution n.
GridCopula grid_from_shuffle(const IntervalExchange& h, std::size_t n);

}  // namespace copgeo
