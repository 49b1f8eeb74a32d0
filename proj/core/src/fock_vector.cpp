#include "catstat/fock_vector.hpp"

#include <cmath>
#include <sstream>

namespace catstat {

std::string word_to_string(const Word& w, std::size_t index_base) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + index_base);
  }
  return s + "]";
}

FockVector FockVector::vacuum() { return basis({}); }

FockVector FockVector::basis(Word w, Complex amplitude) {
  FockVector v;
  v.add(w, amplitude);
  return v;
}

Complex FockVector::amplitude(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Complex{} : it->second;
}

void FockVector::add(const Word& w, Complex amplitude) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (std::abs(amplitude) >= kDropThreshold) terms_.emplace(w, amplitude);
    return;
  }
  it->second += amplitude;
  if (std::abs(it->second) < kDropThreshold) terms_.erase(it);
}

void FockVector::add(const FockVector& other, Complex scale) {
  for (const auto& [w, a] : other.terms_) add(w, a * scale);
}

FockVector FockVector::operator+(const FockVector& other) const {
  FockVector out = *this;
  out.add(other);
  return out;
}

FockVector FockVector::operator-(const FockVector& other) const {
  FockVector out = *this;
  out.add(other, -1.0);
  return out;
}

FockVector FockVector::operator*(Complex scale) const {
  FockVector out;
  for (const auto& [w, a] : terms_) out.add(w, a * scale);
  return out;
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& [w, a] : terms_) s += std::norm(a);
  return std::sqrt(s);
}

std::string FockVector::to_string(std::size_t index_base) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (a.imag() == 0.0) os << a.real();
    else os << "(" << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)";
    os << "*" << word_to_string(w, index_base);
  }
  return os.str();
}

}  // namespace catstat
