#include "copgeo/self_similar.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "copgeo/distance.hpp"
#include "copgeo/error.hpp"
#include "copgeo/mcd_geometry.hpp"

namespace copgeo {

std::size_t piece_cap() {
  if (const char* env = std::getenv("COPGEO_CAP_PIECES")) {
    std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultPieceCap;
}

TransformationMatrix::TransformationMatrix(std::vector<std::vector<Rational>> entries)
    : TransformationMatrix(std::move(entries), true) {}

TransformationMatrix::TransformationMatrix(std::vector<std::vector<Rational>> entries, bool exact)
    : entries_(std::move(entries)), exact_(exact) {
  if (entries_.empty() || entries_.front().empty())
    throw Error(ErrorCode::BadShape, "transformation matrix must be non-empty");
  const std::size_t n = entries_.size(), m = entries_.front().size();
  for (const auto& row : entries_)
    if (row.size() != m) throw Error(ErrorCode::BadShape, "rows of unequal length");
  if (std::max(n, m) < 2) throw Error(ErrorCode::BadShape, "need max(rows, cols) >= 2");

  std::vector<Rational> row_sum(n, Rational(0)), col_sum(m, Rational(0));
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& v = entries_[i][j];
      if (v < 0)
        throw Error(ErrorCode::NegativeEntry, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is negative");
      row_sum[i] += v;
      col_sum[j] += v;
      total += v;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (row_sum[i] == 0) throw Error(ErrorCode::ZeroLine, "row " + std::to_string(i + 1) + " is all zero");
  for (std::size_t j = 0; j < m; ++j)
    if (col_sum[j] == 0) throw Error(ErrorCode::ZeroLine, "column " + std::to_string(j + 1) + " is all zero");
  if (total != 1) throw Error(ErrorCode::NotNormalized, "entries sum to " + to_string(total));

  a_.assign(1, Rational(0));
  for (const auto& c : col_sum) a_.push_back(a_.back() + c);
  b_.assign(1, Rational(0));
  for (const auto& r : row_sum) b_.push_back(b_.back() + r);
}

TransformationMatrix TransformationMatrix::from_real(const std::vector<std::vector<double>>& entries, double tol) {
  std::vector<std::vector<Rational>> exact;
  Rational total = 0;
  for (const auto& row : entries) {
    auto& out = exact.emplace_back();
    for (double v : row) {
      out.push_back(rational_from_double(v));
      total += out.back();
    }
  }
  if (total > 0 && Rational(abs(total - 1)).get_d() <= tol) {
    for (auto& row : exact)
      for (auto& v : row) v /= total;
  }
  return TransformationMatrix(std::move(exact), false);
}

TransformationMatrix permutation_matrix(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 2) throw Error(ErrorCode::BadShape, "permutation matrix needs N >= 2");
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 1; i <= n; ++i) t[i - 1][p(i) - 1] = Rational(1UL, static_cast<unsigned long>(n));
  return TransformationMatrix(std::move(t));
}

namespace {

// Blocks along one axis: [start_k, start_k + width_k).
struct AxisBlocks {
  std::vector<double> start;
  std::vector<double> width;
};

AxisBlocks blocks_from_cumsum(const std::vector<Rational>& cum) {
  AxisBlocks axis;
  for (std::size_t k = 0; k + 1 < cum.size(); ++k) {
    axis.start.push_back(cum[k].get_d());
    axis.width.push_back(Rational(cum[k + 1] - cum[k]).get_d());
  }
  axis.start.push_back(1.0);
  return axis;
}

struct Overlap {
  std::size_t block;
  double lo;  // preimage in the unit interval
  double hi;
};

// For every output cell along an axis, the blocks it meets and the preimage
// of the intersection under the block's affine contraction.
std::vector<std::vector<Overlap>> overlaps(const AxisBlocks& axis, std::size_t resolution) {
  std::vector<std::vector<Overlap>> out(resolution);
  const double r = static_cast<double>(resolution);
  for (std::size_t cell = 0; cell < resolution; ++cell) {
    const double lo = static_cast<double>(cell) / r;
    const double hi = static_cast<double>(cell + 1) / r;
    for (std::size_t k = 0; k < axis.width.size(); ++k) {
      const double b0 = axis.start[k], b1 = axis.start[k + 1];
      const double a = std::max(lo, b0), b = std::min(hi, b1);
      if (b <= a) continue;
      out[cell].push_back({k, std::clamp((a - b0) / axis.width[k], 0.0, 1.0),
                           std::clamp((b - b0) / axis.width[k], 0.0, 1.0)});
    }
  }
  return out;
}

}  // namespace

mpz_class refined_resolution(const TransformationMatrix& t, std::size_t n) {
  mpz_class lcm = 1;
  const Rational cells(static_cast<unsigned long>(n));
  for (const auto* cum : {&t.row_cumsum(), &t.column_cumsum()}) {
    for (std::size_t k = 0; k + 1 < cum->size(); ++k) {
      const Rational width = (*cum)[k + 1] - (*cum)[k];
      for (std::size_t u = 0; u <= n; ++u) {
        const Rational point = (*cum)[k] + width * Rational(static_cast<unsigned long>(u)) / cells;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), point.get_den_mpz_t());
      }
    }
  }
  return lcm;
}

GridCopula apply_VT(const TransformationMatrix& t, const GridCopula& c, std::size_t cap) {
  const mpz_class resolution = refined_resolution(t, c.n());
  if (resolution > static_cast<unsigned long>(cap))
    throw Error(ErrorCode::IncompatibleResolution,
                "exact image needs resolution " + resolution.get_str() + " > cap " + std::to_string(cap));
  return apply_VT_projected(t, c, static_cast<std::size_t>(resolution.get_ui()));
}

GridCopula apply_VT_projected(const TransformationMatrix& t, const GridCopula& c, std::size_t resolution) {
  if (resolution == 0) throw Error(ErrorCode::ResolutionZero, "output resolution must be at least 1");
  const AxisBlocks xb = blocks_from_cumsum(t.row_cumsum());
  const AxisBlocks yb = blocks_from_cumsum(t.column_cumsum());
  const auto xo = overlaps(xb, resolution);
  const auto yo = overlaps(yb, resolution);

  std::vector<std::vector<double>> weight(t.rows(), std::vector<double>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) weight[i][j] = t.entry(i, j).get_d();

  std::vector<double> mass(resolution * resolution, 0.0);
  for (std::size_t X = 0; X < resolution; ++X) {
    for (std::size_t Y = 0; Y < resolution; ++Y) {
      double m = 0;
      for (const auto& ox : xo[X]) {
        for (const auto& oy : yo[Y]) {
          const double w = weight[ox.block][oy.block];
          if (w == 0) continue;
          const double rect = c.cdf(ox.hi, oy.hi) - c.cdf(ox.lo, oy.hi) - c.cdf(ox.hi, oy.lo) + c.cdf(ox.lo, oy.lo);
          m += w * std::max(rect, 0.0);
        }
      }
      mass[X * resolution + Y] = m;
    }
  }
  return GridCopula(resolution, std::move(mass), 1e-10);
}

FixedPointResult fixed_point_grid(const TransformationMatrix& t, std::size_t resolution, double tol,
                                  std::size_t max_iterations) {
  FixedPointResult result{GridCopula::independence(resolution), 0, 0.0, false};
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    GridCopula next = apply_VT_projected(t, result.grid, resolution);
    result.last_step = d_infinity(next, result.grid);
    result.grid = std::move(next);
    result.iterations = it;
    if (result.last_step < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

IntervalExchange iterate_shuffle(const Permutation& p, std::size_t n, std::size_t cap) {
  const std::size_t base = p.size();
  std::size_t count = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (count > cap / base)
      throw Error(ErrorCode::CapExceeded, std::to_string(base) + "^" + std::to_string(n) + " pieces exceed the cap of " +
                                              std::to_string(cap));
    count *= base;
  }
  if (count > cap) throw Error(ErrorCode::CapExceeded, "piece count exceeds the cap");

  std::vector<ExchangePiece> pieces;
  pieces.reserve(count);
  const mpz_class denom(static_cast<unsigned long>(count));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx, target = 0, scale = 1;
    for (std::size_t level = 0; level < n; ++level) {
      const std::size_t digit = rest % base;  // least significant first
      rest /= base;
      target += (p(digit + 1) - 1) * scale;
      scale *= base;
    }
    ExchangePiece piece;
    piece.start = Rational(mpz_class(static_cast<unsigned long>(idx)), denom);
    piece.end = Rational(mpz_class(static_cast<unsigned long>(idx + 1)), denom);
    piece.target = Rational(mpz_class(static_cast<unsigned long>(target)), denom);
    piece.start.canonicalize();
    piece.end.canonicalize();
    piece.target.canonicalize();
    pieces.push_back(std::move(piece));
  }
  return IntervalExchange(std::move(pieces));
}

Rational omega_area_iterate(const Permutation& p, std::size_t n) {
  const Rational first = omega_area_permutation(p);
  const Rational ratio(1UL, static_cast<unsigned long>(p.size()));
  Rational sum = 0, term = 1;
  for (std::size_t k = 0; k < n; ++k) {
    sum += term;
    term *= ratio;
  }
  return first * sum;
}

MeasureReport fixed_point_measures(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 2) throw Error(ErrorCode::BadShape, "self-similar attractor needs N >= 2");
  Rational omega(mpz_class(static_cast<unsigned long>(inversion_count(p))),
                 mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n - 1));
  omega.canonicalize();
  return report_from_omega(omega, true, "fixed-point");
}

std::vector<ConvergenceStep> convergence_diagnostic(const Permutation& p, std::size_t n_max, std::size_t cap) {
  std::vector<ConvergenceStep> steps;
  IntervalExchange current = iterate_shuffle(p, 0, cap);
  std::size_t deepest = 1;
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (deepest > cap / p.size())
      throw Error(ErrorCode::CapExceeded, "iterate " + std::to_string(n_max + 1) + " exceeds the piece cap");
    deepest *= p.size();
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    IntervalExchange next = iterate_shuffle(p, n + 1, cap);
    steps.push_back({n, omega_area_iterate(p, n), d_infinity(current, next)});
    current = std::move(next);
  }
  return steps;
}

}  // namespace copgeo
