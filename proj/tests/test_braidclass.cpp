#include <catch2/catch_amalgamated.hpp>

#include <braidforge/braidclass.hpp>

using namespace braidforge;
using namespace braidforge::braidclass;
using words::make_word;

TEST_CASE("support subsets are normalized and range-checked") {
  REQUIRE(check_support(4, {3, 1, 3}) == std::vector<int>{1, 3});
  REQUIRE(check_support(4, {}).empty());
  REQUIRE_THROWS_AS(check_support(3, {0}), Error);
  REQUIRE_THROWS_AS(check_support(3, {3}), Error);
}

TEST_CASE("strand blocks merge exactly across the chosen generators") {
  REQUIRE(strand_blocks(4, {1}) == std::vector<int>{0, 0, 1, 2});
  REQUIRE(strand_blocks(4, {1, 3}) == std::vector<int>{0, 0, 1, 1});
  REQUIRE(strand_blocks(4, {}) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(strand_blocks(3, {1, 2}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("standard parabolic membership reads off the canonical factors") {
  REQUIRE(parabolic_membership(make_word(3, {1}), {1}));
  REQUIRE(parabolic_membership(make_word(3, {-1}), {1}));
  REQUIRE(parabolic_membership(make_word(4, {1, 2}), {1, 2}));
  REQUIRE_FALSE(parabolic_membership(make_word(3, {2}), {1}));
  REQUIRE_FALSE(parabolic_membership(make_word(3, {1, 2, -1}), {2}));
  REQUIRE_FALSE(parabolic_membership(make_word(3, {1, 2, 1, 1, 2, 1}), {1}));
  REQUIRE(parabolic_membership(make_word(4, {1, 3}), {1, 3}));
  // the identity lies in every parabolic
  REQUIRE(parabolic_membership(make_word(3, {1, -1}), {2}));
}

TEST_CASE("parabolic descriptions must be proper, nonempty and strand-consistent") {
  ParabolicRep p = make_parabolic(3, make_word(3, {}), {1});
  REQUIRE(p.support == std::vector<int>{1});
  REQUIRE_THROWS_AS(make_parabolic(3, make_word(3, {}), {}), Error);
  REQUIRE_THROWS_AS(make_parabolic(3, make_word(3, {}), {1, 2}), Error);
  REQUIRE_THROWS_AS(make_parabolic(3, make_word(4, {}), {1}), Error);
}

TEST_CASE("normalizing a parabolic means conjugation stays inside") {
  ParabolicRep std1 = make_parabolic(3, make_word(3, {}), {1});
  REQUIRE(normalizes(make_word(3, {1}), std1));
  REQUIRE(normalizes(make_word(3, {1, 1, -1}), std1));
  // the half twist swaps the two ends of the diagram
  REQUIRE_FALSE(normalizes(make_word(3, {1, 2, 1}), std1));
  // the full twist is central
  REQUIRE(normalizes(make_word(3, {1, 2, 1, 1, 2, 1}), std1));

  // conjugated copy: sigma_2 sigma_1 sigma_2^{-1} normalizes sigma_2 <sigma_1> sigma_2^{-1}
  ParabolicRep moved = make_parabolic(3, make_word(3, {2}), {1});
  REQUIRE(normalizes(make_word(3, {2, 1, -2}), moved));
  REQUIRE_FALSE(normalizes(make_word(3, {1}), moved));

  REQUIRE_THROWS_AS(normalizes(make_word(4, {1}), std1), Error);
}

TEST_CASE("periodic braids are recognized with their root data") {
  auto half3 = is_periodic(make_word(3, {1, 2, 1}));
  REQUIRE(half3);
  REQUIRE(half3->m == 2);
  REQUIRE(half3->k == 1);

  auto half4 = is_periodic(make_word(4, {1, 2, 3, 1, 2, 1}));
  REQUIRE(half4);
  REQUIRE(half4->m == 2);
  REQUIRE(half4->k == 1);

  auto rot = is_periodic(make_word(3, {1, 2}));
  REQUIRE(rot);
  REQUIRE(rot->m == 3);
  REQUIRE(rot->k == 1);

  auto rot4 = is_periodic(make_word(4, {1, 2, 3}));
  REQUIRE(rot4);
  REQUIRE(rot4->m == 4);
  REQUIRE(rot4->k == 1);

  auto neg = is_periodic(make_word(3, {-1, -2}));
  REQUIRE(neg);
  REQUIRE(neg->m == 3);
  REQUIRE(neg->k == -1);

  REQUIRE_FALSE(is_periodic(make_word(3, {1})));
  REQUIRE_FALSE(is_periodic(make_word(3, {1, -2})));
}

TEST_CASE("candidate enumerations are canonical and complete") {
  REQUIRE(detail::conjugator_candidates(3, 0).size() == 1);
  REQUIRE(detail::conjugator_candidates(3, 0)[0].letters.empty());
  REQUIRE(detail::conjugator_candidates(3, 1).size() == 6);
  // 1 empty + 5 simples + 13 left-weighted two-factor forms
  REQUIRE(detail::conjugator_candidates(3, 2).size() == 19);

  auto sup3 = detail::support_candidates(3);
  REQUIRE(sup3 == std::vector<std::vector<int>>{{1}, {2}});
  REQUIRE(detail::support_candidates(4).size() == 6);
}

TEST_CASE("classification separates the three outcomes") {
  ClassVerdict per = classify(make_word(3, {1, 2, 1}), 1);
  REQUIRE(per.kind == ClassKind::Periodic);
  REQUIRE(per.m == 2);
  REQUIRE(per.k == 1);

  ClassVerdict red = classify(make_word(3, {1}), 0);
  REQUIRE(red.kind == ClassKind::Reducible);
  REQUIRE(red.orbit == 1);
  REQUIRE(red.witness.conjugator.letters.empty());
  REQUIRE(red.witness.support == std::vector<int>{1});
  REQUIRE(normalizes(make_word(3, {1}), red.witness));

  ClassVerdict moved = classify(make_word(3, {2, 1, -2}), 1);
  REQUIRE(moved.kind == ClassKind::Reducible);
  REQUIRE(moved.orbit == 1);
  REQUIRE(normalizes(make_word(3, {2, 1, -2}), moved.witness));

  ClassVerdict split = classify(make_word(4, {1, 3}), 0);
  REQUIRE(split.kind == ClassKind::Reducible);
  REQUIRE(normalizes(make_word(4, {1, 3}), split.witness));

  ClassVerdict none = classify(make_word(3, {1, -2}), 2);
  REQUIRE(none.kind == ClassKind::NoWitnessFound);
  REQUIRE(none.radius == 2);

  REQUIRE_THROWS_AS(classify(make_word(3, {1}), -1), Error);
}
