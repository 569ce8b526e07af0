#include "copgeo/distance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "copgeo/error.hpp"

namespace copgeo {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Column-local view of a shuffle CDF. Pieces whose source lies left of the
// current column contribute a function of y alone (accumulated in `base` at
// the y-lattice); the single piece straddling the column adds `term`.
class ColumnSweep {
 public:
  ColumnSweep(const IntervalExchange& h, const std::vector<double>& ys)
      : pieces_(h.real_pieces()), ys_(ys), base_(ys.size(), 0.0) {}

  void advance_to(double x_left) {
    while (next_ < pieces_.size() && pieces_[next_].end <= x_left) {
      const auto& p = pieces_[next_];
      const double len = p.end - p.start;
      for (std::size_t b = 0; b < ys_.size(); ++b) base_[b] += std::clamp(ys_[b] - p.target, 0.0, len);
      ++next_;
    }
  }

  const RealPiece& current() const { return pieces_[next_]; }

  // Crease of the straddling piece as y = slope * x + offset.
  double slope() const { return current().orientation > 0 ? 1.0 : -1.0; }
  double offset() const {
    const auto& p = current();
    return p.orientation > 0 ? p.target - p.start : p.target + p.end;
  }

  // Value at (x, y) with y in row [ys[b], ys[b+1]].
  double value(double x, double y, std::size_t b) const {
    const double y0 = ys_[b], y1 = ys_[b + 1];
    const double w = y1 > y0 ? (y - y0) / (y1 - y0) : 0.0;
    const double base = base_[b] + w * (base_[b + 1] - base_[b]);
    const auto& p = current();
    double lo, hi;
    if (p.orientation > 0) {
      lo = p.start;
      hi = std::min(x, y - p.target + p.start);
    } else {
      lo = std::max(p.start, p.target + p.end - y);
      hi = x;
    }
    return base + std::max(0.0, hi - lo);
  }

 private:
  std::span<const RealPiece> pieces_;
  const std::vector<double>& ys_;
  std::vector<double> base_;
  std::size_t next_ = 0;
};

}  // namespace

double d_infinity(const GridCopula& a, const GridCopula& b) {
  std::vector<double> lattice;
  for (std::size_t i = 0; i <= a.n(); ++i) lattice.push_back(static_cast<double>(i) / static_cast<double>(a.n()));
  for (std::size_t i = 0; i <= b.n(); ++i) lattice.push_back(static_cast<double>(i) / static_cast<double>(b.n()));
  lattice = sorted_unique(std::move(lattice));
  if ((lattice.size() - 1) * (lattice.size() - 1) > kGridCap * kGridCap)
    throw Error(ErrorCode::CapExceeded, "joint lattice too fine");
  double worst = 0;
  for (double x : lattice)
    for (double y : lattice) worst = std::max(worst, std::abs(a.cdf(x, y) - b.cdf(x, y)));
  return worst;
}

double d_infinity(const IntervalExchange& a, const IntervalExchange& b) {
  std::vector<double> xs, ys;
  for (const auto* h : {&a, &b}) {
    for (const auto& p : h->real_pieces()) {
      xs.push_back(p.start);
      xs.push_back(p.end);
      ys.push_back(p.target);
      ys.push_back(p.target + (p.end - p.start));
    }
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  const std::size_t cells = (xs.size() - 1) * (ys.size() - 1);
  if (cells > kGridCap * kGridCap)
    throw Error(ErrorCode::CapExceeded, "joint breakpoint lattice has " + std::to_string(cells) + " cells");

  ColumnSweep fa(a, ys), fb(b, ys);
  double worst = 0;
  std::array<std::pair<double, double>, 16> candidates{};

  for (std::size_t col = 0; col + 1 < xs.size(); ++col) {
    const double x0 = xs[col], x1 = xs[col + 1];
    fa.advance_to(x0);
    fb.advance_to(x0);
    const std::array<std::pair<double, double>, 2> creases{{{fa.slope(), fa.offset()}, {fb.slope(), fb.offset()}}};

    for (std::size_t row = 0; row + 1 < ys.size(); ++row) {
      const double y0 = ys[row], y1 = ys[row + 1];
      std::size_t count = 0;
      candidates[count++] = {x0, y0};
      candidates[count++] = {x1, y0};
      candidates[count++] = {x0, y1};
      candidates[count++] = {x1, y1};
      for (const auto& [s, k] : creases) {
        for (double x : {x0, x1}) {
          const double y = s * x + k;
          if (y > y0 && y < y1) candidates[count++] = {x, y};
        }
        for (double y : {y0, y1}) {
          const double x = s * (y - k);
          if (x > x0 && x < x1) candidates[count++] = {x, y};
        }
      }
      if (creases[0].first != creases[1].first) {
        const double x = (creases[1].second - creases[0].second) / (creases[0].first - creases[1].first);
        const double y = creases[0].first * x + creases[0].second;
        if (x > x0 && x < x1 && y > y0 && y < y1) candidates[count++] = {x, y};
      }
      for (std::size_t c = 0; c < count; ++c) {
        const auto [x, y] = candidates[c];
        worst = std::max(worst, std::abs(fa.value(x, y, row) - fb.value(x, y, row)));
      }
    }
  }
  return worst;
}

}  // namespace copgeo
