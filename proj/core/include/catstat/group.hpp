#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catstat/phase.hpp"

namespace catstat {

/// Finite Abelian group Z_{n1} x ... x Z_{nk}. k = 0 is the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::int64_t order(std::size_t factor) const { return orders_.at(factor); }

  /// Product of the cyclic orders; saturates at INT64_MAX.
  std::int64_t size() const noexcept;

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

/// Element in additive notation: residues reduced modulo the orders of its group.
class GroupElement {
 public:
  GroupElement() = default;
  /// Residues are reduced mod the orders; the length must equal the group rank.
  GroupElement(GroupSpec group, std::vector<std::int64_t> residues);

  static GroupElement zero(const GroupSpec& group);
  static GroupElement generator(const GroupSpec& group, std::size_t factor);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  std::int64_t operator[](std::size_t i) const { return residues_.at(i); }

  bool is_zero() const noexcept;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement operator-(const GroupElement& other) const { return *this + (-other); }
  GroupElement times(std::int64_t k) const;

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.residues_ <=> b.residues_;
  }

 private:
  GroupSpec group_;
  std::vector<std::int64_t> residues_;
};

GroupSpec make_group(std::vector<std::int64_t> orders);
GroupElement elem_add(const GroupElement& a, const GroupElement& b);

/// Every element of the group in lexicographic residue order.
std::vector<GroupElement> all_elements(const GroupSpec& group);

using PhaseMatrix = std::vector<std::vector<RationalPhase>>;

/// eps(a, b) = exp(2 pi i sum_ij a_i Q_ij b_j). Bilinear by construction once
/// every Q_ij is killed by both n_i and n_j.
class Bicharacter {
 public:
  /// Trivial bicharacter on the group (all phases zero).
  explicit Bicharacter(GroupSpec group);
  Bicharacter(GroupSpec group, PhaseMatrix q);

  const GroupSpec& group() const noexcept { return group_; }
  const PhaseMatrix& matrix() const noexcept { return q_; }

  RationalPhase operator()(const GroupElement& a, const GroupElement& b) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  GroupSpec group_;
  PhaseMatrix q_;
};

Bicharacter make_bicharacter(GroupSpec group, PhaseMatrix q);
RationalPhase eval_bicharacter(const Bicharacter& eps, const GroupElement& a, const GroupElement& b);

/// A pair (first, second) on which a bicharacter identity fails, with the two
/// sides of the identity.
struct PairWitness {
  GroupElement first;
  GroupElement second;
  RationalPhase lhs;
  RationalPhase rhs;
};

/// Witness of eps(a,b) eps(b,a) != 1 on generator pairs; nullopt iff normalized.
std::optional<PairWitness> normalization_violation(const Bicharacter& eps);
bool is_normalized(const Bicharacter& eps);

/// Normalization restricted to the subgroup generated by `elements`.
std::optional<PairWitness> normalization_violation_on(const Bicharacter& eps,
                                                      std::span<const GroupElement> elements);

class GroupHom {
 public:
  GroupHom(GroupSpec source, GroupSpec target, std::vector<GroupElement> images);

  static GroupHom identity(const GroupSpec& group);

  const GroupSpec& source() const noexcept { return source_; }
  const GroupSpec& target() const noexcept { return target_; }
  const std::vector<GroupElement>& images() const noexcept { return images_; }

  GroupElement operator()(const GroupElement& a) const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  GroupSpec source_;
  GroupSpec target_;
  std::vector<GroupElement> images_;
};

GroupHom make_hom(GroupSpec source, GroupSpec target, std::vector<GroupElement> images);

/// outer after inner.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// Witness (a, b) with eps(a,b) != eps'(h a, h b) on generator pairs; lhs is
/// the source value, rhs the target value. nullopt iff h transmutes eps into eps'.
std::optional<PairWitness> transmutation_violation(const GroupHom& h, const Bicharacter& source_eps,
                                                   const Bicharacter& target_eps);
bool check_transmutation(const GroupHom& h, const Bicharacter& source_eps,
                         const Bicharacter& target_eps);

}  // namespace catstat
