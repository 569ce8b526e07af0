#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "copgeo/grid_copula.hpp"
#include "copgeo/interval_exchange.hpp"
#include "copgeo/measure_report.hpp"
#include "copgeo/permutation.hpp"
#include "copgeo/rational.hpp"

namespace copgeo {

/// Default bound on the number of pieces an iterated shuffle may have.
inline constexpr std::size_t kDefaultPieceCap = 1'000'000;

/// kDefaultPieceCap, or the value of COPGEO_CAP_PIECES when set to a positive
/// integer.
std::size_t piece_cap();

/// Non-negative n x m matrix summing to one with no zero row or column and
/// max(n, m) >= 2. Its entries define an iterated function system on the
/// unit square.
///
/// Layout convention: row i of the matrix is the x-block
/// [b_i, b_{i+1}) and column j the y-block [a_j, a_{j+1}), where b and a are
/// the cumulative row and column sums. This matches GridCopula, whose row
/// index is the x-cell, so a permutation matrix with 1/N at (i, pi(i)) and
/// the shuffle of pi put their mass in the same cells.
class TransformationMatrix {
 public:
  /// Exact construction; throws BadShape, NegativeEntry, ZeroLine or
  /// NotNormalized (sum != 1).
  explicit TransformationMatrix(std::vector<std::vector<Rational>> entries);

  /// Binary64 entries; the sum must be within `tol` of one and is then
  /// normalized exactly. exact() reports false.
  static TransformationMatrix from_real(const std::vector<std::vector<double>>& entries, double tol = 1e-12);

  std::size_t rows() const noexcept { return entries_.size(); }
  std::size_t cols() const noexcept { return entries_.front().size(); }
  const Rational& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  /// Cumulative column sums a_0 = 0 < ... < a_m = 1.
  const std::vector<Rational>& column_cumsum() const noexcept { return a_; }
  /// Cumulative row sums b_0 = 0 < ... < b_n = 1.
  const std::vector<Rational>& row_cumsum() const noexcept { return b_; }

  bool exact() const noexcept { return exact_; }

 private:
  TransformationMatrix(std::vector<std::vector<Rational>> entries, bool exact);

  std::vector<std::vector<Rational>> entries_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  bool exact_ = true;
};

/// T_pi: 1/N at (i, pi(i)). Throws BadShape when N < 2.
TransformationMatrix permutation_matrix(const Permutation& p);

/// Resolution on which V_T(C) is again an exact checkerboard: the least
/// common denominator of all images of C's cell boundaries.
mpz_class refined_resolution(const TransformationMatrix& t, std::size_t n);

/// V_T(C) = sum_ij t_ij C^{w_ij}, computed exactly on the refined resolution.
/// Throws IncompatibleResolution when that exceeds `cap`.
GridCopula apply_VT(const TransformationMatrix& t, const GridCopula& c, std::size_t cap = kGridCap);

/// V_T(C) aggregated onto an arbitrary resolution: the cell masses are the
/// exact measure of each cell under V_T(C).
GridCopula apply_VT_projected(const TransformationMatrix& t, const GridCopula& c, std::size_t resolution);

struct FixedPointResult {
  GridCopula grid;
  std::size_t iterations = 0;
  double last_step = 0;  // d_inf between the last two iterates
  bool converged = false;
};

/// Attractor of V_T approximated on a fixed resolution by iterating the
/// projected operator from the independence copula until successive iterates
/// are closer than `tol` in d_inf, or `max_iterations` is reached.
FixedPointResult fixed_point_grid(const TransformationMatrix& t, std::size_t resolution, double tol = 1e-9,
                                  std::size_t max_iterations = 60);

/// V_pi^n(M) as an equidistant shuffle with N^n pieces: piece index digits
/// (base N, most significant first) are mapped through pi one by one.
/// Throws CapExceeded when N^n exceeds `cap`.
IntervalExchange iterate_shuffle(const Permutation& p, std::size_t n, std::size_t cap = piece_cap());

/// Omega area of V_pi^n(M): (inv(pi)/N^2) * sum_{k<n} N^{-k}.
Rational omega_area_iterate(const Permutation& p, std::size_t n);

/// Closed-form measures of the self-similar attractor A_pi^*, whose omega
/// area is inv(pi) / (N (N - 1)). Method "fixed-point". Throws BadShape when
/// N < 2.
MeasureReport fixed_point_measures(const Permutation& p);

struct ConvergenceStep {
  std::size_t n = 0;
  Rational omega;
  double d_inf = 0;  // d_inf(V^n(M), V^{n+1}(M))
};

/// Steps n = 0..n_max. Throws CapExceeded when V^{n_max+1}(M) would exceed
/// the piece cap.
std::vector<ConvergenceStep> convergence_diagnostic(const Permutation& p, std::size_t n_max,
                                                    std::size_t cap = piece_cap());

}  // namespace copgeo
