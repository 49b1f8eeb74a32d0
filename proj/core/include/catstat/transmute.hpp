#pragma once

#include <cstddef>

#include "catstat/group.hpp"
#include "catstat/model.hpp"
#include "catstat/report.hpp"

namespace catstat {

/// Strict functor between two grade-diagonal models with the same generators
/// and pairing, induced by a group homomorphism on the gradings.
class Transmutation {
 public:
  Transmutation(GroupHom hom, ParticleModel source, ParticleModel target);

  const GroupHom& hom() const noexcept { return hom_; }
  const ParticleModel& source() const noexcept { return source_; }
  const ParticleModel& target() const noexcept { return target_; }

 private:
  GroupHom hom_;
  ParticleModel source_;
  ParticleModel target_;
};

/// Model with grades h(gamma_i), bicharacter eps' and the same pairing.
ParticleModel transmute_model(const ParticleModel& model, const GroupHom& h, const Bicharacter& target_eps);

/// Builds the transmutation along h together with its target model.
Transmutation make_transmutation(const ParticleModel& source, const GroupHom& h, const Bicharacter& target_eps);

/// Cross factors eps(b, -a) = eps'(h b, -h a) on every pair of occurring
/// grades ("cross_symmetric"), and the same for braid factors
/// ("braided_functor"). Comparisons are exact.
CheckReport check_cross_symmetric(const Transmutation& t, double tol = kDefaultTolerance);

/// Twisted commutation relations after transport, in two readings:
/// "relation_transport_target" runs the target's own relations,
/// "relation_transport_image" uses the source cross factors on the target
/// operators. They coincide when the cross-symmetry check passes.
CheckReport check_relation_transport(const Transmutation& t, std::size_t n_max, double tol = kDefaultTolerance);

}  // namespace catstat
