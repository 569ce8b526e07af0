#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copgeo/permutation.hpp"
#include "copgeo/rational.hpp"

namespace copgeo {

/// One affine piece of an interval exchange: [start, end) is mapped onto
/// [target, target + (end - start)) with slope +1 or -1.
struct ExchangePiece {
  Rational start;
  Rational end;
  Rational target;
  int orientation = 1;

  Rational length() const { return end - start; }
  Rational target_end() const { return target + (end - start); }

  /// h(x) for x in [start, end].
  Rational apply(const Rational& x) const {
    return orientation > 0 ? Rational(target + (x - start)) : Rational(target + (end - x));
  }
  /// h^{-1}(y) for y in [target, target_end()].
  Rational apply_inverse(const Rational& y) const {
    return orientation > 0 ? Rational(start + (y - target)) : Rational(start + (target_end() - y));
  }

  friend bool operator==(const ExchangePiece&, const ExchangePiece&) = default;
};

/// Same piece with binary64 endpoints, used by the tolerant constructor and by
/// the fast numeric evaluators.
struct RealPiece {
  double start = 0;
  double end = 0;
  double target = 0;
  int orientation = 1;
};

/// Piecewise-affine, slope +/-1, Lebesgue-preserving bijection h of [0,1).
/// Represents the mutually completely dependent copula A_h exactly.
/// Immutable after construction.
class IntervalExchange {
 public:
  /// Exact construction. Sources must partition [0,1) and images must
  /// partition [0,1); throws Error(InvalidIntervalExchange) otherwise.
  explicit IntervalExchange(std::vector<ExchangePiece> pieces);

  /// Construction from binary64 endpoints: the partition conditions are checked
  /// with tolerance `tol`, after which endpoints are snapped so that both
  /// partitions hold exactly. The result reports exact() == false.
  static IntervalExchange from_real(std::span<const RealPiece> pieces, double tol = 1e-12);

  /// h(x) = x, the comonotone copula M.
  static IntervalExchange identity();
  /// h(x) = 1 - x, the countermonotone copula W.
  static IntervalExchange reversal();

  /// Pieces ordered by source start.
  std::span<const ExchangePiece> pieces() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }

  /// Piece indices ordered by image start.
  std::span<const std::size_t> image_order() const noexcept { return by_image_; }

  /// Whether all endpoints came from exact (rational or decimal) input.
  bool exact() const noexcept { return exact_; }

  std::span<const RealPiece> real_pieces() const noexcept { return real_; }

  double apply(double x) const;
  double apply_inverse(double y) const;
  Rational apply(const Rational& x) const;
  Rational apply_inverse(const Rational& y) const;

  /// Merges neighbouring pieces that continue each other affinely. Two
  /// exchanges describe the same map iff their normalized piece lists agree.
  IntervalExchange normalized() const;

  friend bool operator==(const IntervalExchange& a, const IntervalExchange& b);
  friend IntervalExchange invert(const IntervalExchange& h);

 private:
  IntervalExchange(std::vector<ExchangePiece> pieces, bool exact);
  void validate_and_index();

  std::vector<ExchangePiece> pieces_;
  std::vector<std::size_t> by_image_;
  std::vector<RealPiece> real_;
  std::vector<double> starts_;
  std::vector<double> image_starts_;
  bool exact_ = true;
};

/// Equidistant straight shuffle: strip k = [(k-1)/N, k/N) is translated onto
/// [(pi(k)-1)/N, pi(k)/N). The copula of the result is V_pi applied once to M.
IntervalExchange shuffle_from_permutation(const Permutation& p);

/// h^{-1}; its copula is the transpose of A_h.
IntervalExchange invert(const IntervalExchange& h);

/// A_h(x, y) = lambda([0,x] intersect h^{-1}([0,y])), exact.
Rational evaluate_cdf(const IntervalExchange& h, const Rational& x, const Rational& y);

/// Binary64 version of evaluate_cdf; O(number of pieces).
double evaluate_cdf(const IntervalExchange& h, double x, double y);

}  // namespace copgeo
