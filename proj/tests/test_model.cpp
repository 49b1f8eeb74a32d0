#include <doctest.h>

#include <random>

#include "catstat/error.hpp"
#include "catstat/model.hpp"
#include "fixtures.hpp"

using namespace catstat;
using fixtures::identity;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a catstat::Error");
  return ErrorKind::Internal;
}

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("make_model builds the zoo examples") {
  const auto f = fixtures::fermion(2);
  CHECK(f.generator_count() == 2);
  CHECK(f.is_grade_diagonal());
  CHECK(f.has_identity_pairing());

  const auto b = fixtures::boson(1);
  CHECK(b.generator_count() == 1);
  CHECK(b.group().rank() == 0);

  const auto q = fixtures::quon(0.5);
  CHECK_FALSE(q.is_grade_diagonal());
  CHECK(q.braid_matrix().isApprox(fixtures::q_swap(2, 0.5)));
}

TEST_CASE("make_model rejects malformed data") {
  GroupSpec z2({2});
  Bicharacter eps(z2, {{RationalPhase(1, 2)}});
  const GroupElement odd(z2, {1});
  CHECK(kind_of([&] { ParticleModel(eps, {odd, odd}, identity(3)); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { ParticleModel(eps, {}, identity(0)); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { ParticleModel(eps, {GroupElement(GroupSpec({4}), {1})}, identity(1)); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([&] {
          ParticleModel(eps, {odd}, identity(1), BraidSpec::matrix(Eigen::MatrixXcd::Zero(1, 1)));
        }) == ErrorKind::NotInvertible);
  CHECK(kind_of([&] {
          ParticleModel(eps, {odd, odd}, identity(2), BraidSpec::matrix(identity(3)));
        }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] {
          ParticleModel(eps, {odd}, identity(1), BraidSpec::grade_diagonal(), CrossSpec::matrix(identity(2)));
        }) == ErrorKind::SizeMismatch);
}

TEST_CASE("braid_factor") {
  CHECK(braid_factor(fixtures::fermion(2), 0, 1) == Complex(-1, 0));
  CHECK(braid_factor(fixtures::boson(2), 0, 1) == Complex(1, 0));
  CHECK(braid_factor(fixtures::anyon_z4(2), 0, 1) == Complex(0, 1));
  CHECK(kind_of([] { braid_factor(fixtures::quon(0.5), 0, 1); }) == ErrorKind::WrongSpec);
}

TEST_CASE("braid and cross factors use eps(b, a) and eps(b, -a)") {
  GroupSpec z4({4});
  Bicharacter eps(z4, {{RationalPhase(1, 4)}});
  const ParticleModel m(eps, {GroupElement(z4, {1}), GroupElement(z4, {2})}, identity(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(m.braid_phase(i, j) == eps(m.grade(j), m.grade(i)));
      CHECK(m.cross_phase(i, j) == eps(m.grade(j), -m.grade(i)));
    }
  CHECK(m.dual_grade(0) == GroupElement(z4, {3}));
}

TEST_CASE("braid_on_word") {
  // Positions are 0-based in the library.
  CHECK(braid_on_word(fixtures::fermion(2), {0, 1}, 0) == FockVector::basis({1, 0}, -1.0));
  CHECK(braid_on_word(fixtures::boson(2), {0, 1}, 0) == FockVector::basis({1, 0}));
  CHECK(braid_on_word(fixtures::quon(0.5), {0, 1}, 0) == FockVector::basis({1, 0}, 0.5));
  CHECK(braid_on_word(fixtures::fermion(2), {0, 1, 1}, 1) == FockVector::basis({0, 1, 1}, -1.0));
  CHECK(kind_of([] { braid_on_word(fixtures::fermion(2), {0, 1}, 1); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { braid_on_word(fixtures::fermion(2), {0}, 0); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { braid_on_word(fixtures::fermion(2), {0, 5}, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("braid_on_vector is linear") {
  const auto q = fixtures::quon(0.3);
  const FockVector v = FockVector::basis({0, 1}, 2.0) + FockVector::basis({1, 1}, Complex(0, 1));
  const auto lhs = braid_on_vector(q, v, 0);
  const auto rhs = braid_on_word(q, {0, 1}, 0) * 2.0 + braid_on_word(q, {1, 1}, 0) * Complex(0, 1);
  CHECK((lhs - rhs).norm() < 1e-14);
}

TEST_CASE("check_yang_baxter") {
  for (const auto& m : {fixtures::fermion(3), fixtures::boson(2), fixtures::z2z2_fermion(), fixtures::anyon_z4(2)}) {
    const auto r = check_yang_baxter(m);
    CHECK(r.passed());
    CHECK(r.max_defect() == 0.0);
  }
  CHECK(check_yang_baxter(fixtures::quon(0.5)).max_defect() <= 1e-12);

  GroupSpec triv;
  const ParticleModel bad(Bicharacter(triv), {GroupElement(triv, {}), GroupElement(triv, {})}, identity(2),
                          BraidSpec::matrix(fixtures::random_r(2024)));
  const auto r = check_yang_baxter(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.max_defect() > 1e-3);
  CHECK_FALSE(r.checks.front().witness.empty());
}

TEST_CASE("property: grade-diagonal models satisfy Yang-Baxter exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = fixtures::random_grade_diagonal(rng, 1 + rng() % 3);
    const auto r = check_yang_baxter(m);
    CHECK(r.passed());
    CHECK(r.max_defect() == 0.0);
  }
}

TEST_CASE("check_symmetry") {
  CHECK(check_symmetry(fixtures::fermion(2)).passed());
  const auto q = check_symmetry(fixtures::quon(0.5));
  CHECK_FALSE(q.passed());
  CHECK(q.max_defect() == doctest::Approx(0.75));
  CHECK_FALSE(check_symmetry(fixtures::anyon_z4()).passed());
}

TEST_CASE("property: symmetry matches normalization on the occurring grades") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = fixtures::random_grade_diagonal(rng, 1 + rng() % 3);
    const bool normalized = !normalization_violation_on(m.bicharacter(), m.grades()).has_value();
    CHECK(check_symmetry(m).passed() == normalized);
  }
}

TEST_CASE("extend_pairing") {
  const auto f = fixtures::fermion(2);
  CHECK(extend_pairing(f, {0, 1}, {0, 1}) == Complex(1, 0));
  CHECK(extend_pairing(f, {0, 1}, {1, 0}) == Complex(0, 0));

  GroupSpec triv;
  Eigen::MatrixXcd g(2, 2);
  const Complex c(0.3, 0.1);
  g << 1.0, c, std::conj(c), 2.0;
  const ParticleModel m(Bicharacter(triv), {GroupElement(triv, {}), GroupElement(triv, {})}, g);
  CHECK(close(extend_pairing(m, {0, 1}, {1, 1}), c * 2.0));
  CHECK(m.pairing_is_hermitian());
  CHECK(kind_of([&] { extend_pairing(m, {0}, {0, 1}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("property: extend_pairing is multiplicative under concatenation") {
  std::mt19937_64 rng(17);
  GroupSpec triv;
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::MatrixXcd g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = Complex(u(rng), u(rng));
  const ParticleModel m(Bicharacter(triv), std::vector<GroupElement>(3, GroupElement::zero(triv)), g);
  for (int trial = 0; trial < 100; ++trial) {
    Word u1, v1, u2, v2;
    for (std::size_t k = rng() % 3; k > 0; --k) u1.push_back(rng() % 3), v1.push_back(rng() % 3);
    for (std::size_t k = rng() % 3; k > 0; --k) u2.push_back(rng() % 3), v2.push_back(rng() % 3);
    Word u = u1, v = v1;
    u.insert(u.end(), u2.begin(), u2.end());
    v.insert(v.end(), v2.begin(), v2.end());
    CHECK(close(extend_pairing(m, u, v), extend_pairing(m, u1, v1) * extend_pairing(m, u2, v2)));
  }
}

TEST_CASE("effective braid and cross matrices of grade-diagonal models") {
  const auto a = fixtures::anyon_z4(2);
  const auto r = a.braid_matrix();
  const auto t = a.cross_matrix();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(close(r(i * 2 + j, j * 2 + i), a.braid_factor(i, j)));
      CHECK(close(t(i * 2 + j, i * 2 + j), a.cross_phase(i, j).to_complex()));
    }
}
