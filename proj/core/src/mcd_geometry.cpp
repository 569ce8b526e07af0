#include "copgeo/mcd_geometry.hpp"

#include <cmath>
#include <string>

#include "copgeo/error.hpp"

namespace copgeo {

namespace {

constexpr double kSlack = 1e-12;

std::uint64_t merge_count(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& scratch, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[out++] = v[j++];
    } else {
      scratch[out++] = v[i++];
    }
  }
  while (i < mid) scratch[out++] = v[i++];
  while (j < hi) scratch[out++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

void check_range(double value, double lo, double hi, const char* what) {
  if (!(value >= lo - kSlack && value <= hi + kSlack))
    throw Error(ErrorCode::OutOfRange, std::string(what) + " = " + std::to_string(value) + " outside [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// Fenwick tree of exact sums over image ranks.
class RankSums {
 public:
  explicit RankSums(std::size_t n) : tree_(n + 1, Rational(0)) {}
  void add(std::size_t rank, const Rational& v) {
    for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += v;
  }
  Rational prefix(std::size_t count) const {
    Rational s = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<Rational> tree_;
};

}  // namespace

std::uint64_t inversion_count(const Permutation& p) {
  std::vector<std::uint32_t> v(p.values().begin(), p.values().end());
  std::vector<std::uint32_t> scratch(v.size());
  return merge_count(v, scratch, 0, v.size());
}

Rational omega_area_permutation(const Permutation& p) {
  const auto n = static_cast<unsigned long>(p.size());
  Rational q(mpz_class(static_cast<unsigned long>(inversion_count(p))), mpz_class(n) * n);
  q.canonicalize();
  return q;
}

OmegaRegion omega_region(const IntervalExchange& h, RegionKind kind) {
  const bool upper = kind == RegionKind::GradientSqrt2;
  OmegaRegion region;
  region.area = 0;
  const auto pieces = h.pieces();

  for (const auto& pk : pieces) {
    const Rational qk_end = pk.target_end();
    for (std::size_t m : h.image_order()) {
      const auto& pm = pieces[m];
      const Rational qm_end = pm.target_end();

      // Half-plane y >= h(x) (or y <= h(x)) over x in source piece k; h(P_k) = Q_k.
      bool need_first = false;
      if (upper) {
        if (qm_end <= pk.target) continue;
        need_first = pm.target < qk_end;
      } else {
        if (pm.target >= qk_end) continue;
        need_first = qm_end > pk.target;
      }
      // Half-plane x >= h^{-1}(y) (or <=) over y in image piece m; h^{-1}(Q_m) = P_m.
      bool need_second = false;
      if (upper) {
        if (pk.end <= pm.start) continue;
        need_second = pk.start < pm.end;
      } else {
        if (pk.start >= pm.end) continue;
        need_second = pk.end > pm.start;
      }

      Polygon<Rational> poly{{pk.start, pm.target}, {pk.end, pm.target}, {pk.end, qm_end}, {pk.start, qm_end}};
      if (need_first) {
        // y - h(x) >= 0 with h(x) = x + (d - s) or h(x) = (d + e) - x.
        HalfPlane<Rational> plane = pk.orientation > 0
                                        ? HalfPlane<Rational>{-1, 1, Rational(pk.start - pk.target)}
                                        : HalfPlane<Rational>{1, 1, Rational(-(pk.target + pk.end))};
        if (!upper) plane = {-plane.a, -plane.b, -plane.c};
        poly = clip(poly, plane);
      }
      if (need_second && poly.size() >= 3) {
        // x - h^{-1}(y) >= 0 with h^{-1}(y) = y + (s - d) or (e + d) - y.
        HalfPlane<Rational> plane = pm.orientation > 0
                                        ? HalfPlane<Rational>{1, -1, Rational(pm.target - pm.start)}
                                        : HalfPlane<Rational>{1, 1, Rational(-(pm.end + pm.target))};
        if (!upper) plane = {-plane.a, -plane.b, -plane.c};
        poly = clip(poly, plane);
      }
      if (poly.size() < 3) continue;
      Rational a = (need_first || need_second) ? area(poly) : Rational(pk.length() * pm.length());
      if (a == 0) continue;
      region.area += a;
      region.polygons.push_back(std::move(poly));
    }
  }
  return region;
}

Rational omega_area(const IntervalExchange& h) {
  const auto pieces = h.pieces();
  const auto order = h.image_order();
  std::vector<std::size_t> rank(pieces.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  RankSums sums(pieces.size());
  Rational inserted = 0;
  Rational total = 0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Rational len = pieces[k].length();
    // Earlier sources whose images lie above Q_k.
    const Rational above = inserted - sums.prefix(rank[k] + 1);
    total += len * above;
    if (pieces[k].orientation < 0) total += len * len / 2;
    sums.add(rank[k], len);
    inserted += len;
  }
  return total;
}

double kendall_tau_mcd(double omega_area) {
  check_range(omega_area, 0.0, 0.5, "omega area");
  return 1.0 - 4.0 * omega_area;
}

Rational kendall_tau_mcd(const Rational& omega_area) {
  if (omega_area < 0 || omega_area > Rational(1, 2))
    throw Error(ErrorCode::OutOfRange, "omega area " + to_string(omega_area) + " outside [0, 1/2]");
  return Rational(1 - 4 * omega_area);
}

double length_measure_mcd(double omega_area) {
  check_range(omega_area, 0.0, 0.5, "omega area");
  return 1.0 - kLengthSlope * omega_area;
}

double surface_area_mcd(double omega_area) {
  check_range(omega_area, 0.0, 0.5, "omega area");
  return kSqrt2 - kSurfaceSlope * omega_area;
}

double tau_to_length(double tau) {
  check_range(tau, -1.0, 1.0, "tau");
  return 1.0 - kLengthSlope / 4.0 * (1.0 - tau);
}

double length_to_tau(double ell) {
  check_range(ell, 1.0 / kSqrt2, 1.0, "ell");
  return 1.0 - 4.0 * (1.0 - ell) / kLengthSlope;
}

double tau_to_surface(double tau) {
  check_range(tau, -1.0, 1.0, "tau");
  return kSqrt2 - kSurfaceSlope / 4.0 * (1.0 - tau);
}

double surface_to_tau(double surf) {
  check_range(surf, (1.0 + kSqrt3) / 2.0, kSqrt2, "surf");
  return 1.0 - 4.0 * (kSqrt2 - surf) / kSurfaceSlope;
}

Rational spearman_rho_mcd(const IntervalExchange& h) {
  Rational volume = 0;
  for (const auto& p : h.pieces()) {
    // 1 - h(x) = alpha + beta * x on the piece.
    const Rational alpha = p.orientation > 0 ? Rational(1 - p.target + p.start) : Rational(1 - p.target - p.end);
    const int beta = p.orientation > 0 ? -1 : 1;
    // (1 - x)(alpha + beta x) = alpha + (beta - alpha) x - beta x^2
    const Rational d1 = p.end - p.start;
    const Rational d2 = p.end * p.end - p.start * p.start;
    const Rational d3 = p.end * p.end * p.end - p.start * p.start * p.start;
    volume += alpha * d1 + (beta - alpha) * d2 / 2 - beta * d3 / 3;
  }
  return Rational(12 * volume - 3);
}

MeasureReport measure_report_mcd(const IntervalExchange& h) {
  MeasureReport r = report_from_omega(omega_area(h), h.exact(), "exact-mcd");
  const Rational rho = spearman_rho_mcd(h);
  r.rho = rho.get_d();
  if (h.exact()) r.rho_exact = rho;
  r.exact.rho = h.exact();
  return r;
}

}  // namespace copgeo
