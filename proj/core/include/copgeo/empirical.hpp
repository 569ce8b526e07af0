#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copgeo/measure_report.hpp"
#include "copgeo/permutation.hpp"

namespace copgeo {

using Sample = std::vector<std::pair<double, double>>;

/// Two numeric columns separated by commas. A first line with no numeric
/// field is taken as a header; blank lines are ignored. Throws ParseError
/// naming the 1-based line and column, or TooFewRows when fewer than two
/// observations remain.
Sample parse_pairs(std::string_view text);
Sample read_pairs(const std::filesystem::path& path);

enum class TiePolicy {
  Reject,      // TiesPresent on any repeated x or y value
  InputOrder,  // equal values are ranked in order of appearance
};

std::string_view to_string(TiePolicy policy);
TiePolicy parse_tie_policy(std::string_view text);

/// pi(i) = rank of y within the observation whose x has rank i.
Permutation rank_permutation(std::span<const std::pair<double, double>> sample,
                             TiePolicy policy = TiePolicy::Reject);

struct EmpiricalReport {
  std::size_t n = 0;
  std::uint64_t inv = 0;
  TiePolicy tie_policy = TiePolicy::Reject;
  /// omega = inv / (n (n - 1)), tau the sample Kendall tau; ell and surf are
  /// the MCD relations applied to that tau, an extrapolation rather than an
  /// estimator of the sample's own length measure.
  MeasureReport report;
};

EmpiricalReport empirical_measures(std::span<const std::pair<double, double>> sample,
                                   TiePolicy policy = TiePolicy::Reject);

/// Fields: method, n, inv, tie_policy, estimator, then the measure fields.
std::string to_json(const EmpiricalReport& report, int indent = -1);

}  // namespace copgeo
