#include "catstat/transmute.hpp"

#include <algorithm>
#include <cmath>

#include "catstat/error.hpp"
#include "catstat/fock.hpp"

namespace catstat {
namespace {

void require_grade_diagonal(const ParticleModel& m, const char* role) {
  if (!m.cross_is_grade_diagonal()) {
    raise(ErrorKind::WrongSpec, std::string(role) + " model of a transmutation must be grade-diagonal");
  }
}

std::string grade_witness(const GroupElement& a, const GroupElement& b, const RationalPhase& lhs,
                          const RationalPhase& rhs) {
  return "grades (" + a.to_string() + "," + b.to_string() + "): " + lhs.to_string() + " vs " + rhs.to_string();
}

}  // namespace

Transmutation::Transmutation(GroupHom hom, ParticleModel source, ParticleModel target)
    : hom_(std::move(hom)), source_(std::move(source)), target_(std::move(target)) {
  require_grade_diagonal(source_, "source");
  require_grade_diagonal(target_, "target");
  if (!(hom_.source() == source_.group()) || !(hom_.target() == target_.group())) {
    raise(ErrorKind::Domain, "homomorphism " + hom_.source().to_string() + " -> " + hom_.target().to_string() +
                                 " does not connect " + source_.group().to_string() + " and " +
                                 target_.group().to_string());
  }
  if (source_.generator_count() != target_.generator_count()) {
    raise(ErrorKind::SizeMismatch, "transmutation between models with different generator counts");
  }
  if (source_.pairing_matrix() != target_.pairing_matrix()) {
    raise(ErrorKind::Domain, "transmutation must preserve the pairing");
  }
  for (std::size_t i = 0; i < source_.generator_count(); ++i) {
    if (!(hom_(source_.grade(i)) == target_.grade(i))) {
      raise(ErrorKind::Domain, "target grade of generator " + std::to_string(i + 1) + " is not h(source grade)");
    }
  }
}

ParticleModel transmute_model(const ParticleModel& model, const GroupHom& h, const Bicharacter& target_eps) {
  require_grade_diagonal(model, "source");
  if (!(h.source() == model.group())) {
    raise(ErrorKind::Domain, "homomorphism source " + h.source().to_string() + " is not the model group " +
                                 model.group().to_string());
  }
  if (!(target_eps.group() == h.target())) {
    raise(ErrorKind::Domain, "target bicharacter lives on " + target_eps.group().to_string() +
                                 ", homomorphism target is " + h.target().to_string());
  }
  std::vector<GroupElement> grades;
  grades.reserve(model.generator_count());
  for (const auto& g : model.grades()) grades.push_back(h(g));
  return {target_eps, std::move(grades), model.pairing_matrix(), BraidSpec::grade_diagonal(),
          CrossSpec::derived(), model.expansion_sign()};
}

Transmutation make_transmutation(const ParticleModel& source, const GroupHom& h, const Bicharacter& target_eps) {
  return {h, source, transmute_model(source, h, target_eps)};
}

CheckReport check_cross_symmetric(const Transmutation& t, double tol) {
  const auto& src = t.source();
  const auto& dst = t.target();
  const auto N = src.generator_count();
  double cross = 0.0, braid = 0.0;
  std::string cross_w, braid_w;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const auto lhs = src.cross_phase(i, j);
      const auto rhs = dst.cross_phase(i, j);
      if (!(lhs == rhs)) {
        const double d = std::abs(lhs.to_complex() - rhs.to_complex());
        if (d > cross) {
          cross = d;
          cross_w = grade_witness(src.grade(i), src.grade(j), lhs, rhs);
        }
      }
      const auto blhs = src.braid_phase(i, j);
      const auto brhs = dst.braid_phase(i, j);
      if (!(blhs == brhs)) {
        const double d = std::abs(blhs.to_complex() - brhs.to_complex());
        if (d > braid) {
          braid = d;
          braid_w = grade_witness(src.grade(i), src.grade(j), blhs, brhs);
        }
      }
    }
  }
  CheckReport report;
  report.add(graded_check("cross_symmetric", cross, tol, cross_w));
  report.add(graded_check("braided_functor", braid, tol, braid_w));
  return report;
}

CheckReport check_relation_transport(const Transmutation& t, std::size_t n_max, double tol) {
  const auto& src = t.source();
  const auto& dst = t.target();
  const auto N = dst.generator_count();

  CheckReport report;
  auto target = check_commutators(dst, n_max, tol);
  target.checks.front().name = "relation_transport_target";
  report.append(target);

  double image = 0.0;
  std::string image_w;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& w : basis_words(N, n)) {
      const auto base = FockVector::basis(w);
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          FockVector v = annihilate_twisted(dst, i, create(dst, j, base));
          for (const auto& term : src.cross_terms(i, j)) {
            v.add(create(dst, term.letter, annihilate_twisted(dst, term.dual, base)), -term.coeff);
          }
          v.add(w, -dst.pairing(i, j));
          const double d = v.norm();
          if (d > image) {
            image = d;
            image_w = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") on " + word_to_string(w, 1);
          }
        }
      }
    }
  }
  report.add(graded_check("relation_transport_image", image, tol, image_w));
  return report;
}

}  // namespace catstat
