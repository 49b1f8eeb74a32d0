#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "catstat/fock_vector.hpp"
#include "catstat/group.hpp"
#include "catstat/report.hpp"

namespace catstat {

inline constexpr double kDefaultTolerance = 1e-9;

/// One term of Psi(x^i (x) x^j) = sum coeff * x^first (x) x^second.
struct BraidTerm {
  std::size_t first;
  std::size_t second;
  Complex coeff;
};

/// One term of Psi(x^{*i} (x) x^j) = sum coeff * x^letter (x) x^{*dual}.
struct CrossTerm {
  std::size_t dual;
  std::size_t letter;
  Complex coeff;
};

/// Braid symmetry on generator pairs. Matrices are N^2 x N^2 with
/// R(i*N + j, k*N + l) = R^{ij}_{kl}.
class BraidSpec {
 public:
  enum class Kind { GradeDiagonal, Matrix };

  static BraidSpec grade_diagonal() { return BraidSpec(Kind::GradeDiagonal, {}); }
  static BraidSpec matrix(Eigen::MatrixXcd r) { return BraidSpec(Kind::Matrix, std::move(r)); }

  Kind kind() const noexcept { return kind_; }
  const Eigen::MatrixXcd& r() const noexcept { return r_; }

 private:
  BraidSpec(Kind kind, Eigen::MatrixXcd r) : kind_(kind), r_(std::move(r)) {}
  Kind kind_;
  Eigen::MatrixXcd r_;
};

/// Cross symmetry Psi_{U*,V}. T(i*N + j, k*N + l) = T^{ij}_{kl}.
class CrossSpec {
 public:
  enum class Kind { Derived, Matrix };

  static CrossSpec derived() { return CrossSpec(Kind::Derived, {}); }
  static CrossSpec matrix(Eigen::MatrixXcd t) { return CrossSpec(Kind::Matrix, std::move(t)); }

  Kind kind() const noexcept { return kind_; }
  const Eigen::MatrixXcd& t() const noexcept { return t_; }

 private:
  CrossSpec(Kind kind, Eigen::MatrixXcd t) : kind_(kind), t_(std::move(t)) {}
  Kind kind_;
  Eigen::MatrixXcd t_;
};

/// Sign between the direct and the hopped term of the twisted annihilator.
/// Plus is the one under which the twisted commutation relation closes; Minus
/// keeps the literal alternating reading for comparison.
enum class ExpansionSign { Plus, Minus };

/// N graded generators x^0..x^{N-1} with pairing g(i,j) = <i|j>, a braid
/// symmetry and a cross symmetry. Immutable once built.
class ParticleModel {
 public:
  ParticleModel(Bicharacter eps, std::vector<GroupElement> grades, Eigen::MatrixXcd pairing,
                BraidSpec braid = BraidSpec::grade_diagonal(),
                CrossSpec cross = CrossSpec::derived(),
                ExpansionSign sign = ExpansionSign::Plus);

  std::size_t generator_count() const noexcept { return grades_.size(); }

  const GroupSpec& group() const noexcept { return eps_.group(); }
  const Bicharacter& bicharacter() const noexcept { return eps_; }
  const std::vector<GroupElement>& grades() const noexcept { return grades_; }
  const GroupElement& grade(std::size_t i) const { return grades_.at(i); }

  /// Grade of x^{*i}; pairing values then land in grade 0.
  GroupElement dual_grade(std::size_t i) const { return -grades_.at(i); }

  const Eigen::MatrixXcd& pairing_matrix() const noexcept { return pairing_; }
  Complex pairing(std::size_t i, std::size_t j) const { return pairing_(i, j); }
  bool pairing_is_hermitian(double tol = kDefaultTolerance) const;
  bool has_identity_pairing() const;

  const BraidSpec& braid() const noexcept { return braid_; }
  const CrossSpec& cross() const noexcept { return cross_; }
  ExpansionSign expansion_sign() const noexcept { return sign_; }
  ParticleModel with_expansion_sign(ExpansionSign sign) const;

  bool is_grade_diagonal() const noexcept { return braid_.kind() == BraidSpec::Kind::GradeDiagonal; }
  /// Cross factors come from the grading (no explicit T override).
  bool cross_is_grade_diagonal() const noexcept {
    return is_grade_diagonal() && cross_.kind() == CrossSpec::Kind::Derived;
  }

  /// eps(grade j, grade i): Psi(x^i (x) x^j) = factor * x^j (x) x^i.
  /// Raises WrongSpec on matrix-braided models.
  RationalPhase braid_phase(std::size_t i, std::size_t j) const;
  Complex braid_factor(std::size_t i, std::size_t j) const;

  /// eps(grade j, -grade i): factor picked up when x^{*i} moves right past x^j.
  RationalPhase cross_phase(std::size_t i, std::size_t j) const;

  const std::vector<BraidTerm>& braid_terms(std::size_t i, std::size_t j) const {
    return braid_terms_.at(i * generator_count() + j);
  }
  const std::vector<CrossTerm>& cross_terms(std::size_t i, std::size_t j) const {
    return cross_terms_.at(i * generator_count() + j);
  }

  /// Effective R and T, also for grade-diagonal models.
  Eigen::MatrixXcd braid_matrix() const;
  Eigen::MatrixXcd cross_matrix() const;

 private:
  void check_index(std::size_t i) const;

  Bicharacter eps_;
  std::vector<GroupElement> grades_;
  Eigen::MatrixXcd pairing_;
  BraidSpec braid_;
  CrossSpec cross_;
  ExpansionSign sign_;
  std::vector<std::vector<BraidTerm>> braid_terms_;
  std::vector<std::vector<CrossTerm>> cross_terms_;
};

ParticleModel make_model(const GroupSpec& group, Bicharacter eps, std::vector<GroupElement> grades,
                         Eigen::MatrixXcd pairing, BraidSpec braid = BraidSpec::grade_diagonal(),
                         CrossSpec cross = CrossSpec::derived(),
                         ExpansionSign sign = ExpansionSign::Plus);

Complex braid_factor(const ParticleModel& model, std::size_t i, std::size_t j);

/// Applies Psi to the letters at positions k, k+1 (0-based).
FockVector braid_on_word(const ParticleModel& model, const Word& word, std::size_t k);
FockVector braid_on_vector(const ParticleModel& model, const FockVector& v, std::size_t k);

/// Braid relation on every 3-letter word. Grade-diagonal models are checked in
/// exact phase arithmetic.
CheckReport check_yang_baxter(const ParticleModel& model, double tol = kDefaultTolerance);

/// Psi^2 = id on every 2-letter word.
CheckReport check_symmetry(const ParticleModel& model, double tol = kDefaultTolerance);

/// Pairing of (u)^* with v, evaluated innermost pair first:
/// g((x_{u1}..x_{un})^*, x_{v1}..x_{vn}) = prod_k <u_k|v_k>.
Complex extend_pairing(const ParticleModel& model, const Word& u, const Word& v);

}  // namespace catstat
