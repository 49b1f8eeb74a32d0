#include "catstat/group.hpp"

#include <limits>

#include "catstat/error.hpp"

namespace catstat {
namespace {

__extension__ using wide = __int128;

std::int64_t reduce(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* what) {
  if (!(a == b)) {
    raise(ErrorKind::Domain,
          std::string(what) + ": group mismatch " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] <= 0) {
      raise(ErrorKind::InvalidOrder, "cyclic factor " + std::to_string(i) + " has order " +
                                         std::to_string(orders_[i]) + " (must be >= 1)");
    }
  }
}

std::int64_t GroupSpec::size() const noexcept {
  std::int64_t n = 1;
  for (auto o : orders_) {
    if (n > std::numeric_limits<std::int64_t>::max() / o) return std::numeric_limits<std::int64_t>::max();
    n *= o;
  }
  return n;
}

std::string GroupSpec::to_string() const {
  if (orders_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "xZ";
    else s += "Z";
    s += std::to_string(orders_[i]);
  }
  return s;
}

GroupElement::GroupElement(GroupSpec group, std::vector<std::int64_t> residues)
    : group_(std::move(group)), residues_(std::move(residues)) {
  if (residues_.size() != group_.rank()) {
    raise(ErrorKind::Domain, "element with " + std::to_string(residues_.size()) +
                                 " residues in group " + group_.to_string());
  }
  for (std::size_t i = 0; i < residues_.size(); ++i) residues_[i] = reduce(residues_[i], group_.order(i));
}

GroupElement GroupElement::zero(const GroupSpec& group) {
  return {group, std::vector<std::int64_t>(group.rank(), 0)};
}

GroupElement GroupElement::generator(const GroupSpec& group, std::size_t factor) {
  std::vector<std::int64_t> r(group.rank(), 0);
  r.at(factor) = 1;
  return {group, std::move(r)};
}

bool GroupElement::is_zero() const noexcept {
  for (auto r : residues_) {
    if (r != 0) return false;
  }
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  require_same_group(group_, other.group_, "element addition");
  auto r = residues_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += other.residues_[i];
  return {group_, std::move(r)};
}

GroupElement GroupElement::operator-() const { return times(-1); }

GroupElement GroupElement::times(std::int64_t k) const {
  auto r = residues_;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto n = group_.order(i);
    r[i] = static_cast<std::int64_t>((static_cast<wide>(r[i]) * reduce(k, n)) % n);
  }
  return {group_, std::move(r)};
}

std::string GroupElement::to_string() const {
  if (residues_.size() == 1) return std::to_string(residues_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(residues_[i]);
  }
  return s + ")";
}

GroupSpec make_group(std::vector<std::int64_t> orders) { return GroupSpec(std::move(orders)); }

GroupElement elem_add(const GroupElement& a, const GroupElement& b) { return a + b; }

std::vector<GroupElement> all_elements(const GroupSpec& group) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> r(group.rank(), 0);
  while (true) {
    out.emplace_back(group, r);
    std::size_t i = r.size();
    while (i > 0) {
      --i;
      if (++r[i] < group.order(i)) break;
      r[i] = 0;
      if (i == 0) return out;
    }
    if (r.empty()) return out;
  }
}

Bicharacter::Bicharacter(GroupSpec group)
    : group_(std::move(group)),
      q_(group_.rank(), std::vector<RationalPhase>(group_.rank())) {}

Bicharacter::Bicharacter(GroupSpec group, PhaseMatrix q) : group_(std::move(group)), q_(std::move(q)) {
  const auto k = group_.rank();
  if (q_.size() != k) {
    raise(ErrorKind::SizeMismatch, "bicharacter matrix has " + std::to_string(q_.size()) +
                                       " rows, group rank is " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (q_[i].size() != k) {
      raise(ErrorKind::SizeMismatch, "bicharacter matrix row " + std::to_string(i) + " has " +
                                         std::to_string(q_[i].size()) + " entries, expected " +
                                         std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& p = q_[i][j];
      if (!p.annihilated_by(group_.order(i)) || !p.annihilated_by(group_.order(j))) {
        raise(ErrorKind::InvalidBicharacter,
              "entry Q[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + p.to_string() +
                  " is not killed by the orders " + std::to_string(group_.order(i)) + " and " +
                  std::to_string(group_.order(j)));
      }
    }
  }
}

RationalPhase Bicharacter::operator()(const GroupElement& a, const GroupElement& b) const {
  require_same_group(group_, a.group(), "bicharacter evaluation");
  require_same_group(group_, b.group(), "bicharacter evaluation");
  RationalPhase total;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < q_.size(); ++j) {
      if (b[j] == 0) continue;
      total += q_[i][j].times(a[i]).times(b[j]);
    }
  }
  return total;
}

Bicharacter make_bicharacter(GroupSpec group, PhaseMatrix q) { return {std::move(group), std::move(q)}; }

RationalPhase eval_bicharacter(const Bicharacter& eps, const GroupElement& a, const GroupElement& b) {
  return eps(a, b);
}

std::optional<PairWitness> normalization_violation_on(const Bicharacter& eps,
                                                      std::span<const GroupElement> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      const auto ab = eps(elements[i], elements[j]);
      const auto ba = eps(elements[j], elements[i]);
      if (!(ab + ba).is_zero()) return PairWitness{elements[i], elements[j], ab, ba};
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> normalization_violation(const Bicharacter& eps) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < eps.group().rank(); ++i) gens.push_back(GroupElement::generator(eps.group(), i));
  return normalization_violation_on(eps, gens);
}

bool is_normalized(const Bicharacter& eps) { return !normalization_violation(eps).has_value(); }

GroupHom::GroupHom(GroupSpec source, GroupSpec target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank()) {
    raise(ErrorKind::SizeMismatch, "homomorphism needs " + std::to_string(source_.rank()) +
                                       " generator images, got " + std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_group(target_, images_[i].group(), "homomorphism image");
    if (!images_[i].times(source_.order(i)).is_zero()) {
      raise(ErrorKind::NotAHomomorphism,
            "generator " + std::to_string(i) + " of order " + std::to_string(source_.order(i)) +
                " maps to " + images_[i].to_string() + ", whose multiple " +
                images_[i].times(source_.order(i)).to_string() + " is not zero");
    }
  }
}

GroupHom GroupHom::identity(const GroupSpec& group) {
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < group.rank(); ++i) images.push_back(GroupElement::generator(group, i));
  return {group, group, std::move(images)};
}

GroupElement GroupHom::operator()(const GroupElement& a) const {
  require_same_group(source_, a.group(), "homomorphism application");
  auto out = GroupElement::zero(target_);
  for (std::size_t i = 0; i < images_.size(); ++i) out = out + images_[i].times(a[i]);
  return out;
}

GroupHom make_hom(GroupSpec source, GroupSpec target, std::vector<GroupElement> images) {
  return {std::move(source), std::move(target), std::move(images)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  require_same_group(inner.target(), outer.source(), "homomorphism composition");
  std::vector<GroupElement> images;
  for (const auto& img : inner.images()) images.push_back(outer(img));
  return {inner.source(), outer.target(), std::move(images)};
}

std::optional<PairWitness> transmutation_violation(const GroupHom& h, const Bicharacter& source_eps,
                                                   const Bicharacter& target_eps) {
  require_same_group(h.source(), source_eps.group(), "transmutation source");
  require_same_group(h.target(), target_eps.group(), "transmutation target");
  const auto& g = h.source();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto a = GroupElement::generator(g, i);
    for (std::size_t j = 0; j < g.rank(); ++j) {
      const auto b = GroupElement::generator(g, j);
      const auto lhs = source_eps(a, b);
      const auto rhs = target_eps(h(a), h(b));
      if (!(lhs == rhs)) return PairWitness{a, b, lhs, rhs};
    }
  }
  return std::nullopt;
}

bool check_transmutation(const GroupHom& h, const Bicharacter& source_eps, const Bicharacter& target_eps) {
  return !transmutation_violation(h, source_eps, target_eps).has_value();
}

}  // namespace catstat
