#include <doctest.h>

#include <random>

#include "catstat/error.hpp"
#include "catstat/group.hpp"
#include "catstat/phase.hpp"
#include "fixtures.hpp"

using namespace catstat;

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

}  // namespace

TEST_CASE("rational phases reduce and add modulo one") {
  CHECK(RationalPhase(3, 4) + RationalPhase(1, 2) == RationalPhase(1, 4));
  CHECK(RationalPhase(-1, 4) == RationalPhase(3, 4));
  CHECK(RationalPhase(6, 8).to_string() == "3/4");
  CHECK(RationalPhase(5, 5).is_zero());
  CHECK(RationalPhase(1, 3).times(3).is_zero());
  CHECK(RationalPhase(1, 3).annihilated_by(3));
  CHECK_FALSE(RationalPhase(1, 3).annihilated_by(2));
  CHECK(RationalPhase::parse(" 2 / 4 ") == RationalPhase(1, 2));
  CHECK(RationalPhase::parse("3") == RationalPhase());
  CHECK(RationalPhase(1, 2).to_complex() == std::complex<double>(-1.0, 0.0));
  CHECK(RationalPhase(1, 4).to_complex() == std::complex<double>(0.0, 1.0));
  CHECK(kind_of([] { RationalPhase::parse("1/0"); }) == ErrorKind::Schema);
  CHECK(kind_of([] { RationalPhase::parse("a/b"); }) == ErrorKind::Schema);
}

TEST_CASE("make_group") {
  CHECK(make_group({2}).size() == 2);
  CHECK(make_group({2}).to_string() == "Z2");
  CHECK(make_group({}).size() == 1);
  CHECK(make_group({}).rank() == 0);
  CHECK(make_group({2, 3}).to_string() == "Z2xZ3");
  CHECK(kind_of([] { make_group({2, 0}); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([] { make_group({-3}); }) == ErrorKind::InvalidOrder);
}

TEST_CASE("elem_add") {
  const auto z4 = make_group({4});
  CHECK(elem_add(GroupElement(z4, {3}), GroupElement(z4, {2})) == GroupElement(z4, {1}));
  const auto z2z3 = make_group({2, 3});
  CHECK(elem_add(GroupElement(z2z3, {1, 2}), GroupElement(z2z3, {1, 2})) == GroupElement(z2z3, {0, 1}));
  for (const auto& g : all_elements(z2z3)) CHECK(elem_add(g, GroupElement::zero(z2z3)) == g);
  CHECK(kind_of([&] { elem_add(GroupElement(z4, {1}), GroupElement(make_group({2}), {1})); }) ==
        ErrorKind::Domain);
  CHECK(GroupElement(z4, {-1}) == GroupElement(z4, {3}));
  CHECK(kind_of([&] { GroupElement(z4, {1, 1}); }) == ErrorKind::Domain);
}

TEST_CASE("make_bicharacter validates well-definedness") {
  const auto z2 = make_group({2});
  CHECK_NOTHROW(make_bicharacter(z2, {{RationalPhase(1, 2)}}));
  CHECK(kind_of([&] { make_bicharacter(z2, {{RationalPhase(1, 3)}}); }) == ErrorKind::InvalidBicharacter);
  CHECK_NOTHROW(make_bicharacter(make_group({4}), {{RationalPhase(1, 4)}}));
  // Q_ij must be killed by both n_i and n_j.
  const auto z2z4 = make_group({2, 4});
  CHECK(kind_of([&] {
          make_bicharacter(z2z4, {{RationalPhase(), RationalPhase(1, 4)}, {RationalPhase(), RationalPhase()}});
        }) == ErrorKind::InvalidBicharacter);
  CHECK(kind_of([&] { make_bicharacter(z2, {}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("eval_bicharacter") {
  const auto z2 = make_group({2});
  const auto fermi = make_bicharacter(z2, {{RationalPhase(1, 2)}});
  CHECK(eval_bicharacter(fermi, GroupElement(z2, {1}), GroupElement(z2, {1})) == RationalPhase(1, 2));

  const auto z4 = make_group({4});
  const auto anyon = make_bicharacter(z4, {{RationalPhase(1, 4)}});
  CHECK(eval_bicharacter(anyon, GroupElement(z4, {2}), GroupElement(z4, {2})).is_zero());
  CHECK(eval_bicharacter(anyon, GroupElement(z4, {1}), GroupElement(z4, {3})) == RationalPhase(3, 4));
  CHECK(kind_of([&] { eval_bicharacter(anyon, GroupElement(z2, {1}), GroupElement(z4, {1})); }) ==
        ErrorKind::Domain);
}

TEST_CASE("is_normalized") {
  const auto z2 = make_group({2});
  CHECK(is_normalized(make_bicharacter(z2, {{RationalPhase(1, 2)}})));

  const auto z4 = make_group({4});
  const auto w = normalization_violation(make_bicharacter(z4, {{RationalPhase(1, 4)}}));
  REQUIRE(w.has_value());
  CHECK(w->first == GroupElement(z4, {1}));
  CHECK(w->second == GroupElement(z4, {1}));

  // On Z3 only the trivial bicharacter is normalized: enumerate every valid Q.
  const auto z3 = make_group({3});
  std::size_t normalized = 0;
  for (int k = 0; k < 3; ++k) {
    const bool ok = is_normalized(make_bicharacter(z3, {{RationalPhase(k, 3)}}));
    if (ok) {
      ++normalized;
      CHECK(k == 0);
    }
  }
  CHECK(normalized == 1);
  CHECK_FALSE(is_normalized(make_bicharacter(z3, {{RationalPhase(1, 3)}})));
}

TEST_CASE("property: bicharacters are bilinear and agree with the defining formula") {
  std::mt19937_64 rng(7);
  for (const auto& g : fixtures::small_groups()) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto q = fixtures::random_q(g, rng);
      const Bicharacter eps(g, q);
      CHECK(fixtures::bilinearity_violations(eps) == 0);
      for (int s = 0; s < 50; ++s) {
        const auto a = fixtures::random_element(g, rng);
        const auto b = fixtures::random_element(g, rng);
        CHECK(eps(a, b) == fixtures::direct_eps(q, a, b));
      }
    }
  }
}

TEST_CASE("property: normalization on generators agrees with the exhaustive condition") {
  std::mt19937_64 rng(11);
  for (const auto& g : fixtures::small_groups()) {
    if (g.size() > 16) continue;
    for (int trial = 0; trial < 8; ++trial) {
      const Bicharacter eps(g, fixtures::random_q(g, rng));
      bool all_pairs = true;
      for (const auto& a : all_elements(g))
        for (const auto& b : all_elements(g))
          if (!(eps(a, b) + eps(b, a)).is_zero()) all_pairs = false;
      CHECK(is_normalized(eps) == all_pairs);
    }
  }
}

TEST_CASE("make_hom") {
  const auto z2 = make_group({2});
  const auto z4 = make_group({4});
  const auto h = make_hom(z2, z4, {GroupElement(z4, {2})});
  CHECK(h(GroupElement(z2, {1})) == GroupElement(z4, {2}));
  CHECK(kind_of([&] { make_hom(z2, z4, {GroupElement(z4, {1})}); }) == ErrorKind::NotAHomomorphism);

  const auto z2z2 = make_group({2, 2});
  const auto k = make_hom(z2z2, z2, {GroupElement(z2, {1}), GroupElement(z2, {1})});
  CHECK(k(GroupElement(z2z2, {1, 1})).is_zero());
  CHECK(k(GroupElement(z2z2, {0, 1})) == GroupElement(z2, {1}));
  CHECK(kind_of([&] { make_hom(z2z2, z2, {GroupElement(z2, {1})}); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { make_hom(z2, z4, {GroupElement(z2, {1})}); }) == ErrorKind::Domain);
}

TEST_CASE("compose and identity homomorphisms") {
  const auto z2z2 = make_group({2, 2});
  const auto z2 = make_group({2});
  const auto z4 = make_group({4});
  const auto h = make_hom(z2z2, z2, {GroupElement(z2, {1}), GroupElement(z2, {1})});
  const auto k = make_hom(z2, z4, {GroupElement(z4, {2})});
  const auto kh = compose(k, h);
  for (const auto& a : all_elements(z2z2)) CHECK(kh(a) == k(h(a)));
  CHECK(compose(h, GroupHom::identity(z2z2)) == h);
  CHECK(compose(GroupHom::identity(z2), h) == h);
}

TEST_CASE("check_transmutation") {
  const auto z2z2 = make_group({2, 2});
  const auto z2 = make_group({2});
  const RationalPhase half(1, 2);
  const Bicharacter eps(z2z2, {{half, half}, {half, half}});
  const Bicharacter eps2(z2, {{half}});
  const auto h = make_hom(z2z2, z2, {GroupElement(z2, {1}), GroupElement(z2, {1})});
  CHECK(check_transmutation(h, eps, eps2));
  // eps((a,b),(c,d)) = (-1)^{(a+b)(c+d)} over all 16 pairs
  for (const auto& a : all_elements(z2z2))
    for (const auto& b : all_elements(z2z2)) {
      const auto expected = RationalPhase((a[0] + a[1]) * (b[0] + b[1]), 2);
      CHECK(eps(a, b) == expected);
      CHECK(eps2(h(a), h(b)) == expected);
    }

  const auto z4 = make_group({4});
  const auto up = make_hom(z2, z4, {GroupElement(z4, {2})});
  const auto w = transmutation_violation(up, eps2, Bicharacter(z4, {{RationalPhase(1, 4)}}));
  REQUIRE(w.has_value());
  CHECK(w->first == GroupElement(z2, {1}));
  CHECK(w->second == GroupElement(z2, {1}));
  CHECK(w->lhs == half);
  CHECK(w->rhs.is_zero());

  CHECK(check_transmutation(GroupHom::identity(z2z2), eps, eps));
}

TEST_CASE("property: generator-pair transmutation agrees with the exhaustive condition") {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<GroupSpec, GroupSpec>> pairs = {
      {GroupSpec({2, 2}), GroupSpec({2})}, {GroupSpec({2}), GroupSpec({4})},
      {GroupSpec({4}), GroupSpec({2})},    {GroupSpec({2, 4}), GroupSpec({4, 2})},
      {GroupSpec({3}), GroupSpec({6})},    {GroupSpec({6}), GroupSpec({3})}};
  for (const auto& [src, dst] : pairs) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<GroupElement> images;
      for (std::size_t i = 0; i < src.rank(); ++i) {
        GroupElement img;
        do {
          img = fixtures::random_element(dst, rng);
        } while (!img.times(src.order(i)).is_zero());
        images.push_back(img);
      }
      const GroupHom h(src, dst, images);
      const Bicharacter e(src, fixtures::random_q(src, rng));
      const Bicharacter e2(dst, fixtures::random_q(dst, rng));
      bool exhaustive = true;
      for (const auto& a : all_elements(src))
        for (const auto& b : all_elements(src))
          if (e(a, b) != e2(h(a), h(b))) exhaustive = false;
      CHECK(check_transmutation(h, e, e2) == exhaustive);
    }
  }
}
