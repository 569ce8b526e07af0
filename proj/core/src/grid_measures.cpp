#include "copgeo/grid_measures.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "copgeo/contour.hpp"
#include "copgeo/error.hpp"
#include "copgeo/mcd_geometry.hpp"
#include "copgeo/parallel.hpp"

namespace copgeo {

namespace {

void require_resolution(std::size_t k, const char* what) {
  if (k < kMinQuadratureK)
    throw Error(ErrorCode::ResolutionTooLow,
                std::string(what) + " = " + std::to_string(k) + " is below " + std::to_string(kMinQuadratureK));
  if (k > kMaxQuadratureK)
    throw Error(ErrorCode::ResolutionTooHigh,
                std::string(what) + " = " + std::to_string(k) + " is above " + std::to_string(kMaxQuadratureK));
}

// Midpoint-rule sum of g over a k x k lattice, reduced row by row in order.
template <class Integrand>
double midpoint_rule(std::size_t k, Integrand&& g) {
  std::vector<double> rows(k, 0.0);
  const double step = 1.0 / static_cast<double>(k);
  parallel_for(k, [&](std::size_t i) {
    const double x = (static_cast<double>(i) + 0.5) * step;
    double acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += g(x, (static_cast<double>(j) + 0.5) * step);
    rows[i] = acc;
  });
  return std::accumulate(rows.begin(), rows.end(), 0.0) * step * step;
}

}  // namespace

double spearman_rho(const GridCopula& c) {
  const std::size_t n = c.n();
  const double nn = static_cast<double>(n);
  double volume = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wx = 1.0 - (static_cast<double>(i) + 0.5) / nn;
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) row += c.mass(i, j) * (1.0 - (static_cast<double>(j) + 0.5) / nn);
    volume += wx * row;
  }
  return 12.0 * volume - 3.0;
}

double kendall_tau_grid(const GridCopula& c) {
  const std::size_t n = c.n();
  double integral = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double m = c.mass(i, j);
      const double below = c.corner(i + 1, j) - c.corner(i, j);
      const double left = c.corner(i, j + 1) - c.corner(i, j);
      integral += (below + m / 2) * (left + m / 2);
    }
  }
  return 1.0 - 4.0 * integral;
}

LengthProfile length_profile(const CdfFunction& cdf, std::size_t k, std::size_t t_count) {
  require_resolution(k, "lattice resolution");
  require_resolution(t_count, "t count");
  const SampledField field = sample_field(cdf, k);
  LengthProfile profile;
  profile.ts.resize(t_count);
  profile.lengths.resize(t_count);
  parallel_for(t_count, [&](std::size_t j) {
    const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(t_count);
    profile.ts[j] = t;
    profile.lengths[j] = contour_length(field, t, cdf);
  });
  return profile;
}

LengthProfile length_profile(const GridCopula& c, std::size_t k, std::size_t t_count) {
  return length_profile([&c](double x, double y) { return c.cdf(x, y); }, k, t_count);
}

LengthProfile length_profile(const IntervalExchange& h, std::size_t k, std::size_t t_count) {
  return length_profile([&h](double x, double y) { return evaluate_cdf(h, x, y); }, k, t_count);
}

double length_measure(const LengthProfile& profile) {
  if (profile.lengths.empty()) return 0.0;
  return std::accumulate(profile.lengths.begin(), profile.lengths.end(), 0.0) /
         static_cast<double>(profile.lengths.size());
}

double length_measure_numeric(const CdfFunction& cdf, std::size_t k, std::size_t t_count) {
  return length_measure(length_profile(cdf, k, t_count));
}

double length_measure_numeric(const GridCopula& c, std::size_t k, std::size_t t_count) {
  return length_measure(length_profile(c, k, t_count));
}

double length_measure_numeric(const IntervalExchange& h, std::size_t k, std::size_t t_count) {
  return length_measure(length_profile(h, k, t_count));
}

double surface_area_numeric(const GridCopula& c, std::size_t k) {
  require_resolution(k, "quadrature resolution");
  return midpoint_rule(k, [&c](double x, double y) {
    const double gx = c.kernel_x(x, y);
    const double gy = c.kernel_y(x, y);
    return std::sqrt(gx * gx + gy * gy + 1.0);
  });
}

double surface_area_numeric(const IntervalExchange& h, std::size_t k) {
  require_resolution(k, "quadrature resolution");
  return midpoint_rule(k, [&h](double x, double y) {
    const double gx = h.apply(x) <= y ? 1.0 : 0.0;
    const double gy = h.apply_inverse(y) <= x ? 1.0 : 0.0;
    return std::sqrt(gx + gy + 1.0);
  });
}

double surface_area_numeric(const CdfFunction& cdf, std::size_t k) {
  require_resolution(k, "quadrature resolution");
  const double half = 0.5 / static_cast<double>(k);
  const double inv_step = static_cast<double>(k);
  return midpoint_rule(k, [&](double x, double y) {
    const double gx = (cdf(x + half, y) - cdf(x - half, y)) * inv_step;
    const double gy = (cdf(x, y + half) - cdf(x, y - half)) * inv_step;
    return std::sqrt(gx * gx + gy * gy + 1.0);
  });
}

MeasureReport measure_report_grid(const GridCopula& c, std::size_t k, std::size_t t_count) {
  MeasureReport r;
  r.method = "numeric-grid";
  r.rho = spearman_rho(c);
  r.tau = kendall_tau_grid(c);
  r.ell = length_measure_numeric(c, k, t_count);
  r.surf = surface_area_numeric(c, k);
  // For an MCD copula omega = (1 - tau)/4; reported as that plug-in value.
  r.omega_area = (1.0 - r.tau) / 4.0;
  return r;
}

}  // namespace copgeo
