#include "copgeo/empirical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "copgeo/error.hpp"
#include "copgeo/mcd_geometry.hpp"
#include "report_json.hpp"

namespace copgeo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "row " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

// Ranks 0..n-1 of the values, breaking ties by index; `tied` reports whether
// any two values were equal.
std::vector<std::size_t> ranks(std::span<const double> values, bool& tied) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    if (r > 0 && values[order[r]] == values[order[r - 1]]) tied = true;
  }
  return rank;
}

}  // namespace

Sample parse_pairs(std::string_view text) {
  Sample sample;
  std::size_t line_no = 0;
  bool first_content = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;

    const auto fields = split_fields(line);
    std::vector<double> values(fields.size());
    std::vector<bool> numeric(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) numeric[c] = parse_double(fields[c], values[c]);

    if (first_content) {
      first_content = false;
      if (std::none_of(numeric.begin(), numeric.end(), [](bool b) { return b; })) continue;
    }
    if (fields.size() != 2) fail_at(line_no, std::min<std::size_t>(fields.size(), 3), "expected two columns");
    for (std::size_t c = 0; c < 2; ++c)
      if (!numeric[c]) fail_at(line_no, c + 1, "'" + std::string(trim(fields[c])) + "' is not a finite number");
    sample.emplace_back(values[0], values[1]);
  }
  if (sample.size() < 2)
    throw Error(ErrorCode::TooFewRows, "need at least two observations, found " + std::to_string(sample.size()));
  return sample;
}

Sample read_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pairs(buf.str());
}

std::string_view to_string(TiePolicy policy) { return policy == TiePolicy::Reject ? "reject" : "input-order"; }

TiePolicy parse_tie_policy(std::string_view text) {
  if (text == "reject") return TiePolicy::Reject;
  if (text == "input-order") return TiePolicy::InputOrder;
  throw Error(ErrorCode::ParseError, "unknown tie policy '" + std::string(text) + "'");
}

Permutation rank_permutation(std::span<const std::pair<double, double>> sample, TiePolicy policy) {
  const std::size_t n = sample.size();
  if (n < 2) throw Error(ErrorCode::TooFewRows, "need at least two observations");
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) std::tie(xs[k], ys[k]) = sample[k];
  bool tied_x = false, tied_y = false;
  const auto rx = ranks(xs, tied_x);
  const auto ry = ranks(ys, tied_y);
  if (policy == TiePolicy::Reject && (tied_x || tied_y))
    throw Error(ErrorCode::TiesPresent,
                std::string("tied values in ") + (tied_x ? "x" : "y") + "; rerun with the input-order tie policy to break them");
  std::vector<std::uint32_t> values(n);
  for (std::size_t k = 0; k < n; ++k) values[rx[k]] = static_cast<std::uint32_t>(ry[k] + 1);
  return Permutation(std::move(values));
}

EmpiricalReport empirical_measures(std::span<const std::pair<double, double>> sample, TiePolicy policy) {
  const Permutation p = rank_permutation(sample, policy);
  EmpiricalReport out;
  out.n = p.size();
  out.inv = inversion_count(p);
  out.tie_policy = policy;
  Rational omega(mpz_class(static_cast<unsigned long>(out.inv)),
                 mpz_class(static_cast<unsigned long>(out.n)) * static_cast<unsigned long>(out.n - 1));
  omega.canonicalize();
  out.report = report_from_omega(omega, true, "exact-mcd");
  return out;
}

std::string to_json(const EmpiricalReport& report, int indent) {
  nlohmann::ordered_json j;
  const auto measures = detail::report_json(report.report);
  j["method"] = measures["method"];
  j["n"] = report.n;
  j["inv"] = report.inv;
  j["tie_policy"] = to_string(report.tie_policy);
  j["estimator"] = "mcd-extrapolated";
  for (const auto& [key, value] : measures.items())
    if (key != "method") j[key] = value;
  return j.dump(indent);
}

}  // namespace copgeo
