#pragma once

// Model builders and brute-force oracles shared by the unit and acceptance
// tests. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catstat/fock.hpp"
#include "catstat/group.hpp"
#include "catstat/model.hpp"
#include "catstat/phase.hpp"

namespace fixtures {

using catstat::Bicharacter;
using catstat::Complex;
using catstat::GroupElement;
using catstat::GroupSpec;
using catstat::ParticleModel;
using catstat::RationalPhase;
using catstat::Word;

inline std::string models_dir() { return CATSTAT_MODELS_DIR; }
inline std::string model_path(const std::string& name) { return models_dir() + "/" + name; }

inline Eigen::MatrixXcd identity(std::size_t n) {
  return Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

inline ParticleModel boson(std::size_t n) {
  GroupSpec g;
  return ParticleModel(Bicharacter(g), std::vector<GroupElement>(n, GroupElement::zero(g)), identity(n));
}

inline ParticleModel fermion(std::size_t n) {
  GroupSpec g({2});
  Bicharacter eps(g, {{RationalPhase(1, 2)}});
  return ParticleModel(eps, std::vector<GroupElement>(n, GroupElement(g, {1})), identity(n));
}

inline ParticleModel z2z2_fermion() {
  GroupSpec g({2, 2});
  const RationalPhase h(1, 2);
  Bicharacter eps(g, {{h, h}, {h, h}});
  return ParticleModel(eps, {GroupElement(g, {1, 0}), GroupElement(g, {0, 1})}, identity(2));
}

inline ParticleModel anyon_z4(std::size_t n = 1) {
  GroupSpec g({4});
  Bicharacter eps(g, {{RationalPhase(1, 4)}});
  return ParticleModel(eps, std::vector<GroupElement>(n, GroupElement(g, {1})), identity(n));
}

/// R = q * swap on N generators.
inline Eigen::MatrixXcd q_swap(std::size_t n, Complex q) {
  const auto nn = static_cast<Eigen::Index>(n * n);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(static_cast<Eigen::Index>(i * n + j), static_cast<Eigen::Index>(j * n + i)) = q;
  return r;
}

inline ParticleModel quon(double q, std::size_t n = 2) {
  GroupSpec g;
  return ParticleModel(Bicharacter(g), std::vector<GroupElement>(n, GroupElement::zero(g)), identity(n),
                       catstat::BraidSpec::matrix(q_swap(n, q)));
}

/// A valid Q matrix with random entries: Q_ij = k / gcd(n_i, n_j).
inline catstat::PhaseMatrix random_q(const GroupSpec& g, std::mt19937_64& rng) {
  catstat::PhaseMatrix q(g.rank(), std::vector<RationalPhase>(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) {
      const auto d = std::gcd(g.order(i), g.order(j));
      q[i][j] = RationalPhase(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d);
    }
  return q;
}

inline GroupElement random_element(const GroupSpec& g, std::mt19937_64& rng) {
  std::vector<std::int64_t> r(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    r[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.order(i)));
  return GroupElement(g, std::move(r));
}

/// Bilinear form evaluated straight from the definition, as a reduced phase.
inline RationalPhase direct_eps(const catstat::PhaseMatrix& q, const GroupElement& a, const GroupElement& b) {
  RationalPhase total;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) total += q[i][j].times(a[i] * b[j]);
  return total;
}

/// Groups of size at most 64 used by the exhaustive bicharacter properties.
inline std::vector<GroupSpec> small_groups() {
  return {GroupSpec(), GroupSpec({2}), GroupSpec({3}), GroupSpec({4}), GroupSpec({6}),
          GroupSpec({2, 2}), GroupSpec({2, 3}), GroupSpec({2, 4}), GroupSpec({4, 4}),
          GroupSpec({2, 2, 2}), GroupSpec({3, 3}), GroupSpec({2, 2, 4}), GroupSpec({8, 8}),
          GroupSpec({64})};
}

/// Exhaustive bilinearity in both slots; returns the number of violations.
/// Works on tables of eps values and of group addition so that groups of
/// size 64 stay cheap.
inline std::size_t bilinearity_violations(const Bicharacter& eps) {
  const auto elems = catstat::all_elements(eps.group());
  const std::size_t n = elems.size();
  std::map<GroupElement, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[elems[k]] = k;
  std::vector<std::size_t> sum(n * n);
  std::vector<RationalPhase> value(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      sum[a * n + b] = index.at(elems[a] + elems[b]);
      value[a * n + b] = eps(elems[a], elems[b]);
    }
  std::size_t bad = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (value[a * n + sum[b * n + c]] != value[a * n + b] + value[a * n + c]) ++bad;
        if (value[sum[a * n + b] * n + c] != value[a * n + c] + value[b * n + c]) ++bad;
      }
  return bad;
}

/// Random grade-diagonal model with identity pairing.
inline ParticleModel random_grade_diagonal(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<GroupSpec> groups = {GroupSpec({2}), GroupSpec({3}), GroupSpec({4}),
                                                GroupSpec({2, 2}), GroupSpec({2, 4}), GroupSpec({6})};
  const auto& g = groups[rng() % groups.size()];
  Bicharacter eps(g, random_q(g, rng));
  std::vector<GroupElement> grades;
  for (std::size_t i = 0; i < n; ++i) grades.push_back(random_element(g, rng));
  return ParticleModel(eps, grades, identity(n));
}

/// Gram entry as a sum over all ways of pairing the annihilated letters of w
/// with the letters of w'. The p-th letter of w pairs with position s[p] of
/// w'; it first hops past every letter of w' that a later annihilator will
/// take, picking up eps(grade of that letter, -grade of w_p) for each one.
inline Complex permutation_gram_entry(const ParticleModel& m, const Word& w, const Word& wp) {
  if (w.size() != wp.size()) return 0.0;
  const std::size_t n = w.size();
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  Complex total = 0.0;
  do {
    Complex amp = 1.0;
    for (std::size_t p = 0; p < n && amp != 0.0; ++p) amp *= m.pairing(w[p], wp[s[p]]);
    if (amp == 0.0) continue;
    RationalPhase phase;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t later = p + 1; later < n; ++later)
        if (s[later] < s[p])
          phase += m.bicharacter()(m.grade(wp[s[later]]), -m.grade(w[p]));
    total += amp * phase.to_complex();
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

inline Eigen::MatrixXcd permutation_gram(const ParticleModel& m, std::size_t n) {
  const auto basis = catstat::basis_words(m.generator_count(), n);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) g(r, c) = permutation_gram_entry(m, basis[r], basis[c]);
  return g;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Seeded 4x4 complex matrix with entries uniform in the unit square; fails
/// the braid relation by a wide margin.
inline Eigen::MatrixXcd random_r(std::uint64_t seed, std::size_t n = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto nn = static_cast<Eigen::Index>(n * n);
  Eigen::MatrixXcd r(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j) r(i, j) = Complex(u(rng), u(rng));
  return r;
}

}  // namespace fixtures
