#pragma once

#include <cstddef>
#include <vector>

namespace copgeo {

template <class Scalar>
struct Point {
  Scalar x;
  Scalar y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Vertices of a simple polygon in counter-clockwise order.
template <class Scalar>
using Polygon = std::vector<Point<Scalar>>;

/// Closed half-plane {(x, y) : a*x + b*y + c >= 0}.
template <class Scalar>
struct HalfPlane {
  Scalar a;
  Scalar b;
  Scalar c;

  Scalar eval(const Point<Scalar>& p) const { return a * p.x + b * p.y + c; }
};

/// One Sutherland-Hodgman pass: the part of a convex polygon inside `plane`.
/// Intersection points are formed by exact interpolation, so rational inputs
/// stay rational.
template <class Scalar>
Polygon<Scalar> clip(const Polygon<Scalar>& poly, const HalfPlane<Scalar>& plane) {
  Polygon<Scalar> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = poly[i];
    const auto& nxt = poly[(i + 1) % n];
    const Scalar fc = plane.eval(cur);
    const Scalar fn = plane.eval(nxt);
    const bool cur_in = fc >= 0;
    const bool nxt_in = fn >= 0;
    if (cur_in) out.push_back(cur);
    if (cur_in != nxt_in && fc != 0 && fn != 0) {
      const Scalar t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

/// Shoelace area (non-negative).
template <class Scalar>
Scalar area(const Polygon<Scalar>& poly) {
  Scalar twice = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

}  // namespace copgeo
