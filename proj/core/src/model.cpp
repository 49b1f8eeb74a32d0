#include "catstat/model.hpp"

#include <cmath>

#include "catstat/error.hpp"

namespace catstat {
namespace {

void require_square(const Eigen::MatrixXcd& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    raise(ErrorKind::SizeMismatch, std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ", expected " + std::to_string(n) +
                                       "x" + std::to_string(n));
  }
}

}  // namespace

ParticleModel::ParticleModel(Bicharacter eps, std::vector<GroupElement> grades, Eigen::MatrixXcd pairing,
                             BraidSpec braid, CrossSpec cross, ExpansionSign sign)
    : eps_(std::move(eps)),
      grades_(std::move(grades)),
      pairing_(std::move(pairing)),
      braid_(std::move(braid)),
      cross_(std::move(cross)),
      sign_(sign) {
  const auto n = static_cast<Eigen::Index>(grades_.size());
  if (n == 0) raise(ErrorKind::SizeMismatch, "a model needs at least one generator");
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!(grades_[i].group() == group())) {
      raise(ErrorKind::Domain, "grade of generator " + std::to_string(i + 1) + " lies in " +
                                   grades_[i].group().to_string() + ", model group is " +
                                   group().to_string());
    }
  }
  require_square(pairing_, n, "pairing matrix");
  if (braid_.kind() == BraidSpec::Kind::Matrix) {
    require_square(braid_.r(), n * n, "braid matrix R");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(braid_.r());
    if (!lu.isInvertible()) raise(ErrorKind::NotInvertible, "braid matrix R is singular");
  }
  if (cross_.kind() == CrossSpec::Kind::Matrix) require_square(cross_.t(), n * n, "cross matrix T");

  const auto N = grades_.size();
  braid_terms_.resize(N * N);
  cross_terms_.resize(N * N);
  const Eigen::MatrixXcd r = braid_matrix();
  const Eigen::MatrixXcd t = cross_matrix();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const auto row = static_cast<Eigen::Index>(i * N + j);
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t l = 0; l < N; ++l) {
          const auto col = static_cast<Eigen::Index>(k * N + l);
          if (r(row, col) != Complex{}) braid_terms_[i * N + j].push_back({k, l, r(row, col)});
          if (t(row, col) != Complex{}) cross_terms_[i * N + j].push_back({k, l, t(row, col)});
        }
      }
    }
  }
}

ParticleModel ParticleModel::with_expansion_sign(ExpansionSign sign) const {
  ParticleModel copy = *this;
  copy.sign_ = sign;
  return copy;
}

bool ParticleModel::pairing_is_hermitian(double tol) const {
  return (pairing_ - pairing_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ParticleModel::has_identity_pairing() const {
  return pairing_ == Eigen::MatrixXcd::Identity(pairing_.rows(), pairing_.cols());
}

void ParticleModel::check_index(std::size_t i) const {
  if (i >= generator_count()) {
    raise(ErrorKind::OutOfRange, "generator index " + std::to_string(i + 1) + " outside 1.." +
                                     std::to_string(generator_count()));
  }
}

RationalPhase ParticleModel::braid_phase(std::size_t i, std::size_t j) const {
  if (!is_grade_diagonal()) raise(ErrorKind::WrongSpec, "braid factor requested on a matrix-braided model");
  check_index(i);
  check_index(j);
  return eps_(grades_[j], grades_[i]);
}

Complex ParticleModel::braid_factor(std::size_t i, std::size_t j) const {
  return braid_phase(i, j).to_complex();
}

RationalPhase ParticleModel::cross_phase(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  return eps_(grades_[j], dual_grade(i));
}

Eigen::MatrixXcd ParticleModel::braid_matrix() const {
  if (braid_.kind() == BraidSpec::Kind::Matrix) return braid_.r();
  const auto N = generator_count();
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(N * N, N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) r(i * N + j, j * N + i) = braid_factor(i, j);
  }
  return r;
}

Eigen::MatrixXcd ParticleModel::cross_matrix() const {
  if (cross_.kind() == CrossSpec::Kind::Matrix) return cross_.t();
  const auto N = generator_count();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(N * N, N * N);
  if (is_grade_diagonal()) {
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) t(i * N + j, i * N + j) = cross_phase(i, j).to_complex();
    }
    return t;
  }
  // T^{ij}_{kl} = R^{ij}_{lk}: the first output slot of the cross move is the
  // letter, matching the first output slot of the braid.
  const auto& r = braid_.r();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t l = 0; l < N; ++l) t(i * N + j, k * N + l) = r(i * N + j, l * N + k);
      }
    }
  }
  return t;
}

ParticleModel make_model(const GroupSpec& group, Bicharacter eps, std::vector<GroupElement> grades,
                         Eigen::MatrixXcd pairing, BraidSpec braid, CrossSpec cross, ExpansionSign sign) {
  if (!(eps.group() == group)) {
    raise(ErrorKind::Domain, "bicharacter lives on " + eps.group().to_string() + ", model group is " +
                                 group.to_string());
  }
  return {std::move(eps), std::move(grades), std::move(pairing), std::move(braid), std::move(cross), sign};
}

Complex braid_factor(const ParticleModel& model, std::size_t i, std::size_t j) {
  return model.braid_factor(i, j);
}

FockVector braid_on_word(const ParticleModel& model, const Word& word, std::size_t k) {
  if (word.size() < 2 || k + 1 >= word.size()) {
    raise(ErrorKind::OutOfRange, "exchange position " + std::to_string(k + 1) +
                                     " needs letters k, k+1 in a word of length " +
                                     std::to_string(word.size()));
  }
  for (auto letter : word) {
    if (letter >= model.generator_count()) {
      raise(ErrorKind::OutOfRange, "letter " + std::to_string(letter + 1) + " outside 1.." +
                                       std::to_string(model.generator_count()));
    }
  }
  FockVector out;
  Word w = word;
  for (const auto& term : model.braid_terms(word[k], word[k + 1])) {
    w[k] = term.first;
    w[k + 1] = term.second;
    out.add(w, term.coeff);
  }
  return out;
}

FockVector braid_on_vector(const ParticleModel& model, const FockVector& v, std::size_t k) {
  FockVector out;
  for (const auto& [w, a] : v.terms()) out.add(braid_on_word(model, w, k), a);
  return out;
}

CheckReport check_yang_baxter(const ParticleModel& model, double tol) {
  const auto N = model.generator_count();
  double defect = 0.0;
  std::string witness;
  if (model.is_grade_diagonal()) {
    // Both sides send [a,b,c] to [c,b,a]; compare the accumulated phases exactly.
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        for (std::size_t c = 0; c < N; ++c) {
          const auto lhs = model.braid_phase(a, b) + model.braid_phase(a, c) + model.braid_phase(b, c);
          const auto rhs = model.braid_phase(b, c) + model.braid_phase(a, c) + model.braid_phase(a, b);
          if (!(lhs == rhs)) {
            const double d = std::abs(lhs.to_complex() - rhs.to_complex());
            if (d > defect) {
              defect = d;
              witness = word_to_string({a, b, c}, 1);
            }
          }
        }
      }
    }
  } else {
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        for (std::size_t c = 0; c < N; ++c) {
          const Word w{a, b, c};
          const auto lhs = braid_on_vector(model, braid_on_vector(model, braid_on_word(model, w, 0), 1), 0);
          const auto rhs = braid_on_vector(model, braid_on_vector(model, braid_on_word(model, w, 1), 0), 1);
          const double d = (lhs - rhs).norm();
          if (d > defect) {
            defect = d;
            witness = word_to_string(w, 1);
          }
        }
      }
    }
  }
  CheckReport report;
  report.add(graded_check("yang_baxter", defect, tol, witness));
  return report;
}

CheckReport check_symmetry(const ParticleModel& model, double tol) {
  const auto N = model.generator_count();
  double defect = 0.0;
  std::string witness;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      double d = 0.0;
      if (model.is_grade_diagonal()) {
        const auto round_trip = model.braid_phase(i, j) + model.braid_phase(j, i);
        if (!round_trip.is_zero()) d = std::abs(round_trip.to_complex() - 1.0);
      } else {
        const Word w{i, j};
        d = (braid_on_vector(model, braid_on_word(model, w, 0), 0) - FockVector::basis(w)).norm();
      }
      if (d > defect) {
        defect = d;
        witness = word_to_string({i, j}, 1);
      }
    }
  }
  CheckReport report;
  report.add(graded_check("symmetry", defect, tol, witness));
  return report;
}

Complex extend_pairing(const ParticleModel& model, const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    raise(ErrorKind::LengthMismatch, "pairing words of lengths " + std::to_string(u.size()) + " and " +
                                         std::to_string(v.size()));
  }
  // The dual word reverses the letters, so the innermost pair is (u_1, v_1).
  Complex value = 1.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] >= model.generator_count() || v[k] >= model.generator_count()) {
      raise(ErrorKind::OutOfRange, "pairing letter outside 1.." + std::to_string(model.generator_count()));
    }
    value *= model.pairing(u[k], v[k]);
  }
  return value;
}

}  // namespace catstat
