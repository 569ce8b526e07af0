#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "copgeo/interval_exchange.hpp"
#include "copgeo/measure_report.hpp"
#include "copgeo/permutation.hpp"
#include "copgeo/polygon.hpp"
#include "copgeo/rational.hpp"

namespace copgeo {

/// 2 - sqrt(2): slope of ell in the omega area.
inline const double kLengthSlope = 2.0 - std::sqrt(2.0);
/// 2 sqrt(2) - 1 - sqrt(3): slope of surf in the omega area.
inline const double kSurfaceSlope = 2.0 * std::sqrt(2.0) - 1.0 - std::sqrt(3.0);

/// Number of pairs i < k with p(i) > p(k), by merge counting in O(N log N).
std::uint64_t inversion_count(const Permutation& p);

/// Area of Omega for the one-step shuffle V_p(M): inv(p) / N^2.
Rational omega_area_permutation(const Permutation& p);

/// Union of non-overlapping polygons with its exact total area.
struct OmegaRegion {
  std::vector<Polygon<Rational>> polygons;
  Rational area;

  double area_value() const { return area.get_d(); }
};

enum class RegionKind {
  /// {h(x) <= y, h^{-1}(y) <= x}: the set where |grad A_h| = sqrt(2).
  GradientSqrt2,
  /// {h(x) > y, h^{-1}(y) > x}: the set where grad A_h vanishes.
  GradientZero,
};

/// Clips every rectangle (source piece k) x (image piece m) against the two
/// half-planes defining the region. Rectangles that lie entirely on one side
/// of a half-plane are classified by interval comparisons; the rest go
/// through Sutherland-Hodgman. Null polygons are dropped.
OmegaRegion omega_region(const IntervalExchange& h, RegionKind kind = RegionKind::GradientSqrt2);

/// Area of omega_region(h) without building polygons: a length-weighted
/// inversion count over the pieces plus len^2/2 for each reversed piece,
/// O(P log P).
Rational omega_area(const IntervalExchange& h);

/// tau = 1 - 4 omega. Throws OutOfRange unless omega is in [0, 1/2].
double kendall_tau_mcd(double omega_area);
Rational kendall_tau_mcd(const Rational& omega_area);

/// ell = 1 - (2 - sqrt 2) omega.
double length_measure_mcd(double omega_area);

/// surf = sqrt 2 - (2 sqrt 2 - 1 - sqrt 3) omega.
double surface_area_mcd(double omega_area);

/// ell = 1 - ((2 - sqrt 2)/4)(1 - tau); tau in [-1, 1].
double tau_to_length(double tau);
/// Inverse of tau_to_length; ell in [1/sqrt 2, 1].
double length_to_tau(double ell);
/// surf = sqrt 2 - ((2 sqrt 2 - 1 - sqrt 3)/4)(1 - tau).
double tau_to_surface(double tau);
/// Inverse of tau_to_surface; surf in [(1 + sqrt 3)/2, sqrt 2].
double surface_to_tau(double surf);

/// Spearman's rho of A_h: 12 * int_0^1 (1 - x)(1 - h(x)) dx - 3, integrated
/// exactly piece by piece.
Rational spearman_rho_mcd(const IntervalExchange& h);

/// All measures of A_h by the closed forms, method "exact-mcd".
MeasureReport measure_report_mcd(const IntervalExchange& h);

}  // namespace copgeo
