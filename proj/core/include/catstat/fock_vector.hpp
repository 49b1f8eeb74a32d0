#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace catstat {

using Complex = std::complex<double>;

/// Basis word of the tensor Fock space: generator indices (0-based), read
/// left to right. The empty word is the vacuum.
using Word = std::vector<std::size_t>;

std::string word_to_string(const Word& w, std::size_t index_base = 0);

/// Finite linear combination of words. Amplitudes below `kDropThreshold` in
/// magnitude are never stored, so equal vectors have equal term maps.
class FockVector {
 public:
  static constexpr double kDropThreshold = 1e-14;

  using Terms = std::map<Word, Complex>;

  FockVector() = default;

  static FockVector vacuum();
  static FockVector basis(Word w, Complex amplitude = 1.0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Complex amplitude(const Word& w) const;

  void add(const Word& w, Complex amplitude);
  void add(const FockVector& other, Complex scale = 1.0);

  FockVector operator+(const FockVector& other) const;
  FockVector operator-(const FockVector& other) const;
  FockVector operator*(Complex scale) const;
  friend FockVector operator*(Complex scale, const FockVector& v) { return v * scale; }

  /// Euclidean norm of the amplitude vector in the word basis.
  double norm() const;

  std::string to_string(std::size_t index_base = 0) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

}  // namespace catstat
