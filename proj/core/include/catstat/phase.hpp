#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace catstat {

/// Exact unit complex number exp(2*pi*i * num/den), stored as a reduced
/// fraction in [0, 1). Addition of phases is multiplication of the
/// corresponding unit complex numbers.
class RationalPhase {
 public:
  RationalPhase() = default;
  RationalPhase(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" or an integer "p". Whitespace around the parts is ignored.
  static RationalPhase parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  RationalPhase operator+(const RationalPhase& other) const;
  RationalPhase operator-() const;
  RationalPhase operator-(const RationalPhase& other) const { return *this + (-other); }
  RationalPhase& operator+=(const RationalPhase& other) { return *this = *this + other; }

  /// k-fold sum, k may be negative.
  RationalPhase times(std::int64_t k) const;

  /// True iff k * (this) is an integer, i.e. the phase is a k-th root of unity.
  bool annihilated_by(std::int64_t k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const RationalPhase&, const RationalPhase&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace catstat
