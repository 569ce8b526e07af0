#include "copgeo/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "copgeo/error.hpp"

namespace copgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateOrOutOfRange: return "DuplicateOrOutOfRange";
    case ErrorCode::InvalidIntervalExchange: return "InvalidIntervalExchange";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::ResolutionZero: return "ResolutionZero";
    case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::ResolutionTooHigh: return "ResolutionTooHigh";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::ZeroLine: return "ZeroLine";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::IncompatibleResolution: return "IncompatibleResolution";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::TiesPresent: return "TiesPresent";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    result = Rational(p, q);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_literal(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_literal(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    long scale = exponent - static_cast<long>(frac_part.size());
    if (scale >= 0) {
      result = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::ParseError, "non-finite value cannot be represented exactly");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

mpz_class floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace copgeo
