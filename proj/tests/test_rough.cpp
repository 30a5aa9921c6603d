#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace softaura;

TEST_CASE("station approximations and accuracy") {
  const auto space = fixtures::stations_space();
  const auto ctx = space.context();
  const auto g = fixtures::stations_target(space);
  const auto r = approximate(space, g);
  CHECK(r.lower == make_soft_set(ctx, {{"e1", {"s3"}}, {"e2", {}}, {"e3", {}}, {"e4", {"s4"}}}));
  CHECK(r.upper == make_soft_set(ctx, {{"e1", {"s3", "s5"}},
                                       {"e2", {"s2"}},
                                       {"e3", {"s1", "s4"}},
                                       {"e4", {"s3", "s4", "s5"}}}));
  CHECK(r.boundary ==
        make_soft_set(ctx, {{"e1", {"s5"}}, {"e2", {"s2"}}, {"e3", {"s1", "s4"}}, {"e4", {"s3", "s5"}}}));
  CHECK(r.accuracy.lower_sum == 2);
  CHECK(r.accuracy.upper_sum == 8);
  CHECK(r.accuracy.fraction() == "2/8");
  CHECK(r.accuracy.value == Rational(1, 4));
  CHECK(r.accuracy.value.decimal() == "0.25");
  CHECK_FALSE(r.accuracy.convention_applied);
  REQUIRE(r.per_parameter.size() == 4);
  CHECK(r.per_parameter[1].convention_applied == false);
  CHECK(r.per_parameter[1].value == Rational(0, 1));
  CHECK(boundary(space, g) == r.boundary);
}

TEST_CASE("accuracy conventions and extremes") {
  const auto space = fixtures::stations_space();
  const auto ctx = space.context();
  const auto empty = accuracy(space, SoftSet::null(ctx));
  CHECK(empty.convention_applied);
  CHECK(empty.value == Rational(1, 1));
  CHECK(empty.fraction() == "0/0");
  const auto full = accuracy(space, SoftSet::absolute(ctx));
  CHECK_FALSE(full.convention_applied);
  CHECK(full.value == Rational(1, 1));
  CHECK(full.fraction() == "20/20");

  const auto chain = fixtures::chain_space();
  const auto three = fixtures::chain_set(chain, {"3"});
  CHECK(boundary(chain, three) == fixtures::chain_set(chain, {"2"}));
  CHECK(accuracy(chain, three).value == Rational(1, 2));

  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 3).decimal() == "0.333333");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rough laws on random spaces") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 1000; ++i) {
    const auto space = harness::random_space(rng, 1 + rng() % 7, 1 + rng() % 3, harness::FamilyTopology::Discrete);
    const auto g = harness::random_soft_set(rng, space.context());
    const auto r = approximate(space, g);
    CHECK(is_subset(r.lower, g));
    CHECK(is_subset(g, r.upper));
    CHECK(soft_intersection(r.boundary, r.lower).is_null());
    CHECK(soft_union(r.boundary, r.lower) == r.upper);
    CHECK(r.accuracy.lower_sum <= r.accuracy.upper_sum);
    CHECK_FALSE(Rational(1, 1) < r.accuracy.value);
    const auto scope = naive::scope_of(space);
    CHECK(naive::of(r.lower) == naive::interior(scope, naive::of(g)));
    CHECK(naive::of(r.upper) == naive::closure(scope, naive::of(g)));
  }
}

TEST_CASE("Pawlak partitions") {
  auto ctx = Context::make({"s1", "s2", "s3", "s4", "s5"}, {"e1", "e2"});
  const auto p = PawlakPartition::from_names(ctx, {{"s1", "s2"}, {"s3", "s4", "s5"}});
  const auto scan = pawlak_block_scan(p, 0b00111);
  CHECK(scan.lower == 0b00011);
  CHECK(scan.upper == 0b11111);
  CHECK(pawlak_equivalence_check(p, 0b00111));
  CHECK(pawlak_scope(p).slice(3, 1) == 0b11100);

  CHECK_THROWS_AS(PawlakPartition::from_names(ctx, {{"s1", "s2"}, {"s2", "s3", "s4", "s5"}}), Error);
  CHECK_THROWS_AS(PawlakPartition::from_names(ctx, {{"s1", "s2"}, {"s3", "s4"}}), Error);
  CHECK_THROWS_AS(PawlakPartition(ctx, {0b11111, 0}), Error);
  CHECK_THROWS_AS(pawlak_equivalence_check(p, 0b100000), Error);
}

TEST_CASE("Pawlak equivalence on random partitions") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto ctx = harness::make_context(n, 1 + rng() % 3);
    // Random labelling of points by block ids.
    std::map<std::size_t, PointMask> by_label;
    for (std::size_t x = 0; x < n; ++x) by_label[rng() % n] |= bit(x);
    std::vector<PointMask> blocks;
    for (const auto& [label, mask] : by_label) blocks.push_back(mask);
    const PawlakPartition p(ctx, blocks);
    const PointMask target = rng() & low_mask(n);
    CHECK(pawlak_equivalence_check(p, target));

    // Independent oracle: x is in the lower approximation iff its whole block is in the target.
    PointMask lower = 0, upper = 0;
    for (std::size_t x = 0; x < n; ++x) {
      bool inside = true, meets = false;
      for (std::size_t y = 0; y < n; ++y) {
        if (!(p.block_of(x) & bit(y))) continue;
        inside = inside && (target & bit(y));
        meets = meets || (target & bit(y));
      }
      if (inside) lower |= bit(x);
      if (meets) upper |= bit(x);
    }
    const auto scan = pawlak_block_scan(p, target);
    CHECK(scan.lower == lower);
    CHECK(scan.upper == upper);
  }
}
