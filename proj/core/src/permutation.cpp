#include "copgeo/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "copgeo/error.hpp"

namespace copgeo {

Permutation::Permutation(std::vector<value_type> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::DuplicateOrOutOfRange, "permutation must be non-empty");
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto v = values_[i];
    if (v < 1 || v > values_.size())
      throw Error(ErrorCode::DuplicateOrOutOfRange,
                  "entry " + std::to_string(i + 1) + " = " + std::to_string(v) + " outside 1.." +
                      std::to_string(values_.size()));
    if (seen[v])
      throw Error(ErrorCode::DuplicateOrOutOfRange, "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<value_type>(n - i);
  return Permutation(std::move(v));
}

__extension__ using u128 = unsigned __int128;

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  u128 m = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), value_type{1});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = uniform_index(rng, i);
    std::swap(v[i - 1], v[j]);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    value_type v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError, "bad permutation entry '" + std::string(token) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<value_type>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

}  // namespace copgeo
