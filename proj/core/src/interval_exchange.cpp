#include "copgeo/interval_exchange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "copgeo/error.hpp"

namespace copgeo {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidIntervalExchange, what);
}

}  // namespace

IntervalExchange::IntervalExchange(std::vector<ExchangePiece> pieces)
    : IntervalExchange(std::move(pieces), true) {}

IntervalExchange::IntervalExchange(std::vector<ExchangePiece> pieces, bool exact)
    : pieces_(std::move(pieces)), exact_(exact) {
  validate_and_index();
}

void IntervalExchange::validate_and_index() {
  if (pieces_.empty()) invalid("no pieces");
  for (const auto& p : pieces_) {
    if (p.orientation != 1 && p.orientation != -1) invalid("orientation must be +1 or -1");
    if (!(p.start < p.end)) invalid("empty or reversed source interval");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const ExchangePiece& a, const ExchangePiece& b) { return a.start < b.start; });

  if (pieces_.front().start != 0) invalid("source intervals must start at 0");
  for (std::size_t k = 1; k < pieces_.size(); ++k)
    if (pieces_[k].start != pieces_[k - 1].end)
      invalid("source intervals do not partition [0,1) at piece " + std::to_string(k));
  if (pieces_.back().end != 1) invalid("source intervals must end at 1");

  by_image_.resize(pieces_.size());
  std::iota(by_image_.begin(), by_image_.end(), std::size_t{0});
  std::sort(by_image_.begin(), by_image_.end(),
            [this](std::size_t a, std::size_t b) { return pieces_[a].target < pieces_[b].target; });
  if (pieces_[by_image_.front()].target != 0) invalid("image intervals must start at 0");
  for (std::size_t k = 1; k < by_image_.size(); ++k)
    if (pieces_[by_image_[k]].target != pieces_[by_image_[k - 1]].target_end())
      invalid("image intervals do not partition [0,1)");
  if (pieces_[by_image_.back()].target_end() != 1) invalid("image intervals must end at 1");

  real_.clear();
  starts_.clear();
  image_starts_.clear();
  for (const auto& p : pieces_) {
    real_.push_back({p.start.get_d(), p.end.get_d(), p.target.get_d(), p.orientation});
    starts_.push_back(p.start.get_d());
  }
  for (auto k : by_image_) image_starts_.push_back(pieces_[k].target.get_d());
}

IntervalExchange IntervalExchange::from_real(std::span<const RealPiece> pieces, double tol) {
  if (pieces.empty()) invalid("no pieces");
  std::vector<RealPiece> sorted(pieces.begin(), pieces.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const RealPiece& a, const RealPiece& b) { return a.start < b.start; });

  // Snap sources onto an exact partition, keeping each piece's right endpoint.
  std::vector<ExchangePiece> exact(sorted.size());
  Rational cursor = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto& r = sorted[k];
    if (std::abs(r.start - cursor.get_d()) > tol) invalid("source gap or overlap beyond tolerance");
    exact[k].start = cursor;
    exact[k].end = (k + 1 == sorted.size()) ? Rational(1) : rational_from_double(r.end);
    if (k + 1 == sorted.size() && std::abs(r.end - 1.0) > tol) invalid("source intervals must end at 1");
    if (!(exact[k].start < exact[k].end)) invalid("empty source interval after snapping");
    exact[k].orientation = r.orientation;
    cursor = exact[k].end;
  }

  std::vector<std::size_t> order(sorted.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sorted[a].target < sorted[b].target; });
  cursor = 0;
  for (auto k : order) {
    if (std::abs(sorted[k].target - cursor.get_d()) > tol) invalid("image gap or overlap beyond tolerance");
    exact[k].target = cursor;
    cursor += exact[k].length();
  }
  return IntervalExchange(std::move(exact), false);
}

IntervalExchange IntervalExchange::identity() {
  return IntervalExchange({ExchangePiece{0, 1, 0, 1}});
}

IntervalExchange IntervalExchange::reversal() {
  return IntervalExchange({ExchangePiece{0, 1, 0, -1}});
}

double IntervalExchange::apply(double x) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
  const auto& p = real_[it == starts_.begin() ? 0 : static_cast<std::size_t>(it - starts_.begin()) - 1];
  return p.orientation > 0 ? p.target + (x - p.start) : p.target + (p.end - x);
}

double IntervalExchange::apply_inverse(double y) const {
  auto it = std::upper_bound(image_starts_.begin(), image_starts_.end(), y);
  const auto idx = it == image_starts_.begin() ? 0 : static_cast<std::size_t>(it - image_starts_.begin()) - 1;
  const auto& p = real_[by_image_[idx]];
  const double len = p.end - p.start;
  return p.orientation > 0 ? p.start + (y - p.target) : p.start + (p.target + len - y);
}

Rational IntervalExchange::apply(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const ExchangePiece& p) { return v < p.start; });
  return (it == pieces_.begin() ? *it : *(it - 1)).apply(x);
}

Rational IntervalExchange::apply_inverse(const Rational& y) const {
  auto it = std::upper_bound(by_image_.begin(), by_image_.end(), y,
                             [this](const Rational& v, std::size_t k) { return v < pieces_[k].target; });
  return pieces_[it == by_image_.begin() ? *it : *(it - 1)].apply_inverse(y);
}

IntervalExchange IntervalExchange::normalized() const {
  std::vector<ExchangePiece> merged;
  for (const auto& p : pieces_) {
    if (!merged.empty()) {
      auto& last = merged.back();
      const bool continues =
          last.orientation == p.orientation && last.end == p.start &&
          (p.orientation > 0 ? p.target == last.target_end() : p.target_end() == last.target);
      if (continues) {
        if (p.orientation < 0) last.target = p.target;
        last.end = p.end;
        continue;
      }
    }
    merged.push_back(p);
  }
  return IntervalExchange(std::move(merged), exact_);
}

bool operator==(const IntervalExchange& a, const IntervalExchange& b) {
  return a.normalized().pieces_ == b.normalized().pieces_;
}

IntervalExchange shuffle_from_permutation(const Permutation& p) {
  const auto n = p.size();
  std::vector<ExchangePiece> pieces;
  pieces.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExchangePiece piece;
    piece.start = Rational(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(n));
    piece.end = Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    piece.target = Rational(static_cast<unsigned long>(p(k) - 1), static_cast<unsigned long>(n));
    piece.start.canonicalize();
    piece.end.canonicalize();
    piece.target.canonicalize();
    pieces.push_back(std::move(piece));
  }
  return IntervalExchange(std::move(pieces));
}

IntervalExchange invert(const IntervalExchange& h) {
  std::vector<ExchangePiece> pieces;
  pieces.reserve(h.size());
  for (const auto& p : h.pieces())
    pieces.push_back(ExchangePiece{p.target, p.target_end(), p.start, p.orientation});
  return IntervalExchange(std::move(pieces), h.exact());
}

Rational evaluate_cdf(const IntervalExchange& h, const Rational& x, const Rational& y) {
  Rational total = 0;
  for (const auto& p : h.pieces()) {
    if (p.start >= x) break;
    const Rational& right = x < p.end ? x : p.end;
    Rational lo, hi;
    if (p.orientation > 0) {
      lo = p.start;
      hi = y - p.target + p.start;  // h(t) <= y  <=>  t <= hi
      if (right < hi) hi = right;
    } else {
      lo = p.target + p.end - y;  // h(t) <= y  <=>  t >= lo
      if (lo < p.start) lo = p.start;
      hi = right;
    }
    if (lo < hi) total += hi - lo;
  }
  return total;
}

double evaluate_cdf(const IntervalExchange& h, double x, double y) {
  double total = 0;
  for (const auto& p : h.real_pieces()) {
    if (p.start >= x) break;
    const double right = std::min(x, p.end);
    double lo, hi;
    if (p.orientation > 0) {
      lo = p.start;
      hi = std::min(right, y - p.target + p.start);
    } else {
      lo = std::max(p.start, p.target + p.end - y);
      hi = right;
    }
    if (lo < hi) total += hi - lo;
  }
  return total;
}

}  // namespace copgeo
