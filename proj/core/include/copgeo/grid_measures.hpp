#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "copgeo/grid_copula.hpp"
#include "copgeo/interval_exchange.hpp"
#include "copgeo/measure_report.hpp"

namespace copgeo {

/// A copula CDF given as a callable on [0,1]^2.
using CdfFunction = std::function<double(double, double)>;

inline constexpr std::size_t kDefaultQuadratureK = 512;
inline constexpr std::size_t kDefaultTCount = 512;
inline constexpr std::size_t kMinQuadratureK = 16;
inline constexpr std::size_t kMaxQuadratureK = 8192;

/// Samples of the length profile t -> L_A(t) at the midpoints
/// t_j = (j - 1/2) / t_count.
struct LengthProfile {
  std::vector<double> ts;
  std::vector<double> lengths;
};

/// Spearman's rho = 12 * int C - 3. On a checkerboard,
/// int C = sum_ij m_ij (1 - x_i)(1 - y_j) with (x_i, y_j) the cell centres.
double spearman_rho(const GridCopula& c);

/// Kendall's tau from the kernel identity
/// tau = 1 - 4 * int K_A(x,[0,y]) K_{A^t}(y,[0,x]). On a checkerboard both
/// kernels are affine in the local cell coordinate, which integrates to
/// sum_ij (R_ij + m_ij/2)(S_ij + m_ij/2) with R, S the masses below and left
/// of cell (i, j).
double kendall_tau_grid(const GridCopula& c);

/// Boundary length of the lower t-cuts inside the open square, by marching
/// squares on the CDF sampled on a (k+1) x (k+1) lattice. Throws
/// ResolutionTooLow for k < 16 or t_count < 16 and ResolutionTooHigh above
/// 8192.
LengthProfile length_profile(const CdfFunction& cdf, std::size_t k, std::size_t t_count);
LengthProfile length_profile(const GridCopula& c, std::size_t k, std::size_t t_count);
/// Samples the exact shuffle CDF, not a checkerboard of it.
LengthProfile length_profile(const IntervalExchange& h, std::size_t k, std::size_t t_count);

/// ell = int_0^1 L(t) dt by the midpoint rule over the profile.
double length_measure(const LengthProfile& profile);
double length_measure_numeric(const CdfFunction& cdf, std::size_t k = kDefaultQuadratureK,
                              std::size_t t_count = kDefaultTCount);
double length_measure_numeric(const GridCopula& c, std::size_t k = kDefaultQuadratureK,
                              std::size_t t_count = kDefaultTCount);
double length_measure_numeric(const IntervalExchange& h, std::size_t k = kDefaultQuadratureK,
                              std::size_t t_count = kDefaultTCount);

/// Surface area int sqrt(C_x^2 + C_y^2 + 1) by the k x k midpoint rule.
/// Checkerboards use their closed-form kernels.
double surface_area_numeric(const GridCopula& c, std::size_t k = kDefaultQuadratureK);
/// Shuffles use the indicator kernels 1{h(x) <= y} and 1{h^{-1}(y) <= x}.
double surface_area_numeric(const IntervalExchange& h, std::size_t k = kDefaultQuadratureK);
/// General CDFs use central differences across each quadrature cell.
double surface_area_numeric(const CdfFunction& cdf, std::size_t k = kDefaultQuadratureK);

/// rho, tau, ell and surf of a checkerboard; method "numeric-grid".
MeasureReport measure_report_grid(const GridCopula& c, std::size_t k = kDefaultQuadratureK,
                                  std::size_t t_count = kDefaultTCount);

}  // namespace copgeo
