#include "copgeo/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace copgeo {

SampledField sample_field(const std::function<double(double, double)>& f, std::size_t k) {
  SampledField field;
  field.k = k;
  field.values.resize((k + 1) * (k + 1));
  const double step = 1.0 / static_cast<double>(k);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      field.values[i * (k + 1) + j] = f(static_cast<double>(i) * step, static_cast<double>(j) * step);
  return field;
}

namespace {

struct Pt {
  double x, y;
};

double segment_length(const Pt& a, const Pt& b) {
  const bool on_boundary = (a.x == 0.0 && b.x == 0.0) || (a.x == 1.0 && b.x == 1.0) ||
                           (a.y == 0.0 && b.y == 0.0) || (a.y == 1.0 && b.y == 1.0);
  return on_boundary ? 0.0 : std::hypot(a.x - b.x, a.y - b.y);
}

Pt interpolate(const Pt& a, double fa, const Pt& b, double fb, double level) {
  const double t = fb == fa ? 0.5 : (level - fa) / (fb - fa);
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace

double contour_length(const SampledField& field, double level,
                      const std::function<double(double, double)>& center) {
  const std::size_t k = field.k;
  const double step = 1.0 / static_cast<double>(k);
  double total = 0;

  for (std::size_t i = 0; i < k; ++i) {
    // Cells (i, j) crossing the level satisfy f(i, j) < level <= f(i+1, j+1).
    std::size_t lo = 0, hi = k;
    {
      std::size_t a = 0, b = k;
      while (a < b) {
        const std::size_t mid = (a + b) / 2;
        if (field.at(i + 1, mid + 1) >= level) b = mid; else a = mid + 1;
      }
      lo = a;
      a = lo;
      b = k;
      while (a < b) {
        const std::size_t mid = (a + b) / 2;
        if (field.at(i, mid) >= level) b = mid; else a = mid + 1;
      }
      hi = a;
    }

    const double x0 = static_cast<double>(i) * step;
    const double x1 = i + 1 == k ? 1.0 : static_cast<double>(i + 1) * step;
    for (std::size_t j = lo; j < hi; ++j) {
      const double y0 = static_cast<double>(j) * step;
      const double y1 = j + 1 == k ? 1.0 : static_cast<double>(j + 1) * step;
      // Corners counter-clockwise from bottom-left.
      const std::array<Pt, 4> p{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
      const std::array<double, 4> f{field.at(i, j), field.at(i + 1, j), field.at(i + 1, j + 1), field.at(i, j + 1)};
      int mask = 0;
      for (int c = 0; c < 4; ++c)
        if (f[c] >= level) mask |= 1 << c;
      if (mask == 0 || mask == 15) continue;

      // Edge e joins corner e and corner (e+1)%4.
      auto edge_point = [&](int e) {
        const int a = e, b = (e + 1) % 4;
        return interpolate(p[a], f[a], p[b], f[b], level);
      };

      if (mask == 5 || mask == 10) {
        const double c = center ? center((x0 + x1) / 2, (y0 + y1) / 2) : (f[0] + f[1] + f[2] + f[3]) / 4;
        const bool joined = (c >= level) == (mask == 5);
        // joined: corners 0 and 2 share a region, so cut off corners 1 and 3.
        if (joined) {
          total += segment_length(edge_point(0), edge_point(1));
          total += segment_length(edge_point(2), edge_point(3));
        } else {
          total += segment_length(edge_point(3), edge_point(0));
          total += segment_length(edge_point(1), edge_point(2));
        }
        continue;
      }

      std::array<Pt, 2> ends{};
      int found = 0;
      for (int e = 0; e < 4 && found < 2; ++e) {
        const bool a_in = (mask >> e) & 1;
        const bool b_in = (mask >> ((e + 1) % 4)) & 1;
        if (a_in != b_in) ends[found++] = edge_point(e);
      }
      total += segment_length(ends[0], ends[1]);
    }
  }
  return total;
}

}  // namespace copgeo
