#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace copgeo {

/// A bijection of {1,...,N}, stored as its 1-based images. This is the
/// discrete skeleton of an equidistant straight shuffle: strip k of the unit
/// interval is sent to strip image(k).
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Validates that `values` is a bijection of {1..N}; throws
  /// Error(DuplicateOrOutOfRange) otherwise (also for an empty sequence).
  explicit Permutation(std::vector<value_type> values);

  static Permutation identity(std::size_t n);
  static Permutation reversal(std::size_t n);

  /// Uniformly random permutation (Fisher-Yates driven by raw engine output so
  /// the result only depends on the engine's documented sequence).
  static Permutation random(std::size_t n, std::mt19937_64& rng);

  /// Parses "1,3,2" (whitespace tolerated). Throws ParseError on bad tokens,
  /// DuplicateOrOutOfRange on a non-bijection.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }

  /// Image of k, both 1-based.
  value_type operator()(std::size_t k) const { return values_[k - 1]; }

  std::span<const value_type> values() const noexcept { return values_; }

  Permutation inverse() const;

  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> values_;
};

/// Uniform integer in [0, bound) from raw 64-bit engine output (Lemire's
/// multiply-shift with rejection), independent of the standard library's
/// distribution implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0,1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace copgeo
