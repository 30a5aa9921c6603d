#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace softaura;

namespace {

SoftSet random_set(std::mt19937_64& rng, const ContextPtr& ctx) { return harness::random_soft_set(rng, ctx); }

ContextPtr random_context(std::mt19937_64& rng) {
  return harness::make_context(1 + rng() % 6, 1 + rng() % 4);
}

}  // namespace

TEST_CASE("context rejects empty, duplicate and oversized declarations") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::NotFound;
  };
  CHECK(kind_of([] { Context::make({}, {"e"}); }) == ErrorKind::EmptyContext);
  CHECK(kind_of([] { Context::make({"x"}, {}); }) == ErrorKind::EmptyContext);
  CHECK(kind_of([] { Context::make({"x", "x"}, {"e"}); }) == ErrorKind::DuplicateIdentifier);
  CHECK(kind_of([] { Context::make({"x"}, {"e", "e"}); }) == ErrorKind::DuplicateIdentifier);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("p" + std::to_string(i));
  CHECK(kind_of([&] { Context::make(many, {"e"}); }) == ErrorKind::UniverseTooLarge);
  many.pop_back();
  CHECK(Context::make(many, {"e"})->full_mask() == ~PointMask{0});
}

TEST_CASE("make_soft_set builds and validates named slices") {
  auto ctx = fixtures::example3_context();
  const auto a = fixtures::f1(ctx);
  CHECK(a[0] == 0b001);
  CHECK(a[1] == 0b011);
  CHECK(make_soft_set(ctx, {{"e1", {}}, {"e2", {}}}).is_null());
  CHECK(make_soft_set(ctx, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3", "x2", "x1"}}}).is_absolute());

  auto stations = Context::make({"s1", "s2", "s3", "s4", "s5"}, {"e1", "e2", "e3", "e4"});
  try {
    make_soft_set(stations, {{"e1", {"s9"}}, {"e2", {}}, {"e3", {}}, {"e4", {}}});
    FAIL("expected UnknownPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPoint);
    CHECK(std::string(e.what()).find("s9") != std::string::npos);
  }
  CHECK_THROWS_MATCHES(make_soft_set(ctx, {{"e1", {}}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::MissingParameter;
                       }));
  CHECK_THROWS_MATCHES(make_soft_set(ctx, {{"e1", {}}, {"e2", {}}, {"e9", {}}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::ExtraParameter;
                       }));
  CHECK_THROWS_AS(SoftSet(ctx, {0b1000, 0}), Error);
  CHECK_THROWS_AS(SoftSet(ctx, {0}), Error);
}

TEST_CASE("set operations on the three-point example sets") {
  auto ctx = fixtures::example3_context();
  const auto a = fixtures::f1(ctx), b = fixtures::f2(ctx), c = fixtures::f3(ctx);
  CHECK(soft_union(a, c) == c);
  CHECK(complement(SoftSet::absolute(ctx)) == SoftSet::null(ctx));
  CHECK(complement(soft_union(a, b)) == soft_intersection(complement(a), complement(b)));
  CHECK(is_subset(a, b));
  CHECK(is_subset(SoftSet::null(ctx), a));
  CHECK_FALSE(equals(a, c));
  CHECK(format_soft_set(a) == "e1:{x1}, e2:{x1,x2}");
  CHECK(soft_point(ctx, "x2") == make_soft_set(ctx, {{"e1", {"x2"}}, {"e2", {"x2"}}}));
  CHECK(soft_difference(b, a) == make_soft_set(ctx, {{"e1", {"x2"}}, {"e2", {"x3"}}}));
}

TEST_CASE("operands from different contexts are rejected") {
  auto ctx = fixtures::example3_context();
  auto other = Context::make({"y1", "y2", "y3"}, {"e1", "e2"});
  const auto a = SoftSet::null(ctx);
  const auto b = SoftSet::null(other);
  for (auto op : {+[](const SoftSet& x, const SoftSet& y) { (void)soft_union(x, y); },
                  +[](const SoftSet& x, const SoftSet& y) { (void)soft_intersection(x, y); },
                  +[](const SoftSet& x, const SoftSet& y) { (void)is_subset(x, y); },
                  +[](const SoftSet& x, const SoftSet& y) { (void)equals(x, y); }}) {
    try {
      op(a, b);
      FAIL("expected ContextMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ContextMismatch);
    }
  }
  // Structurally equal contexts are interchangeable.
  auto twin = fixtures::example3_context();
  CHECK(soft_union(fixtures::f1(ctx), fixtures::f3(twin)) == fixtures::f3(ctx));
}

TEST_CASE("empty big union and big intersection") {
  auto ctx = fixtures::example3_context();
  CHECK(big_union(ctx, {}) == SoftSet::null(ctx));
  CHECK(big_intersection(ctx, {}) == SoftSet::absolute(ctx));
  const std::vector<SoftSet> family{fixtures::f1(ctx), fixtures::f2(ctx), fixtures::f3(ctx)};
  CHECK(big_union(ctx, family) == fixtures::f2(ctx));
  CHECK(big_intersection(ctx, family) == fixtures::f1(ctx));
}

TEST_CASE("Boolean algebra laws agree with the naive model on random triples") {
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 2000; ++i) {
    auto ctx = random_context(rng);
    const auto a = random_set(rng, ctx), b = random_set(rng, ctx), c = random_set(rng, ctx);
    const auto na = naive::of(a), nb = naive::of(b);
    CHECK(naive::of(soft_union(a, b)) == naive::unite(na, nb));
    CHECK(naive::of(soft_intersection(a, b)) == naive::meet(na, nb));
    CHECK(naive::of(complement(a)) == naive::complement(na, ctx->points()));
    CHECK(is_subset(a, b) == naive::subset(na, nb));

    CHECK(soft_union(a, b) == soft_union(b, a));
    CHECK(soft_intersection(a, b) == soft_intersection(b, a));
    CHECK(soft_union(a, soft_union(b, c)) == soft_union(soft_union(a, b), c));
    CHECK(soft_intersection(a, soft_intersection(b, c)) == soft_intersection(soft_intersection(a, b), c));
    CHECK(soft_intersection(a, soft_union(b, c)) == soft_union(soft_intersection(a, b), soft_intersection(a, c)));
    CHECK(soft_union(a, soft_intersection(b, c)) == soft_intersection(soft_union(a, b), soft_union(a, c)));
    CHECK(complement(complement(a)) == a);
    CHECK(complement(soft_union(a, b)) == soft_intersection(complement(a), complement(b)));
    CHECK(complement(soft_intersection(a, b)) == soft_union(complement(a), complement(b)));
    CHECK(soft_union(a, complement(a)).is_absolute());
    CHECK(soft_intersection(a, complement(a)).is_null());

    // Partial order.
    CHECK(is_subset(a, a));
    if (is_subset(a, b) && is_subset(b, a)) CHECK(equals(a, b));
    if (is_subset(a, b) && is_subset(b, c)) CHECK(is_subset(a, c));
    CHECK(is_subset(soft_intersection(a, b), a));
    CHECK(is_subset(a, soft_union(a, b)));
  }
}

TEST_CASE("cardinality and canonical order") {
  auto ctx = fixtures::example3_context();
  CHECK(fixtures::f2(ctx).cardinality() == 5);
  CHECK(fixtures::f1(ctx) < fixtures::f3(ctx));
  CHECK(to_named_slices(fixtures::f1(ctx)) == NamedSlices{{"e1", {"x1"}}, {"e2", {"x1", "x2"}}});
}
