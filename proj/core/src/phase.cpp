#include "catstat/phase.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "catstat/error.hpp"

namespace catstat {
namespace {

__extension__ using wide = __int128;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      (static_cast<wide>(mod(a, m)) * static_cast<wide>(mod(b, m))) % m);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    raise(ErrorKind::Schema, "cannot parse rational phase '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

RationalPhase::RationalPhase(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) raise(ErrorKind::Domain, "phase with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  num_ = mod(numerator, denominator);
  den_ = denominator;
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

RationalPhase RationalPhase::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text), 1};
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) raise(ErrorKind::Schema, "zero denominator in '" + std::string(text) + "'");
  return {parse_int(text.substr(0, slash), text), den};
}

RationalPhase RationalPhase::operator+(const RationalPhase& other) const {
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t den = den_ / g * other.den_;
  const std::int64_t a = mulmod(num_, other.den_ / g, den);
  const std::int64_t b = mulmod(other.num_, den_ / g, den);
  return {mod(a + b, den), den};
}

RationalPhase RationalPhase::operator-() const { return {den_ - num_, den_}; }

RationalPhase RationalPhase::times(std::int64_t k) const { return {mulmod(num_, k, den_), den_}; }

bool RationalPhase::annihilated_by(std::int64_t k) const { return times(k).is_zero(); }

std::complex<double> RationalPhase::to_complex() const {
  // Exact values for the quarter turns keep +-1 and +-i free of rounding.
  if (num_ == 0) return {1.0, 0.0};
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

std::string RationalPhase::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace catstat
