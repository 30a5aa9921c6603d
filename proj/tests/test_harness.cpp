#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace softaura;

namespace {

std::uint64_t expected_scope_count(std::size_t n, std::size_t m) {
  // Each of the n·m cells picks any subset of the other n-1 points.
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n * m; ++i) c <<= (n - 1);
  return c;
}

}  // namespace

TEST_CASE("scope enumeration counts and validity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto ctx = harness::make_context(n, m);
      auto top = std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx));
      const auto spaces = harness::enumerate_scope_functions(ctx, top);
      CHECK(spaces.size() == expected_scope_count(n, m));
      std::set<std::vector<PointMask>> distinct;
      for (const auto& s : spaces) {
        std::vector<PointMask> table;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t e = 0; e < m; ++e) {
            CHECK((s.scope().slice(x, e) & bit(x)) != 0);
            table.push_back(s.scope().slice(x, e));
          }
        }
        distinct.insert(table);
      }
      CHECK(distinct.size() == spaces.size());
    }
  }
  CHECK(harness::discrete_family(1, 1).size() == 1);
  CHECK(harness::discrete_family(2, 1).size() == 1 + 4);
  CHECK(harness::discrete_family(3, 2).size() == 4182);

  // Explicit topology: every point picks a member that contains it everywhere.
  auto ex = fixtures::example3_context();
  auto top = std::make_shared<const SoftTopology>(
      std::get<SoftTopology>(validate_topology(ex, {{"null", SoftSet::null(ex)},
                                                    {"absolute", SoftSet::absolute(ex)},
                                                    {"F1", fixtures::f1(ex)},
                                                    {"F2", fixtures::f2(ex)},
                                                    {"F3", fixtures::f3(ex)}})));
  // x1: F1, F2, F3, X; x2: F2, F3, X; x3: X.
  CHECK(harness::ScopeEnumerator(ex, top).total() == 12);
  CHECK_THROWS_AS(harness::ScopeEnumerator(ex, top, 5), Error);
}

TEST_CASE("size guards") {
  harness::SpaceFamilySpec spec;
  spec.max_universe = 4;
  spec.max_params = 4;
  CHECK_THROWS_MATCHES(harness::run_law_suite(spec), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::SizeGuard;
                       }));
  spec.sampled_spaces = 3;
  CHECK_NOTHROW(harness::check_guards(spec));
  spec.max_universe = 0;
  CHECK_THROWS_AS(harness::check_guards(spec), Error);
  spec.max_universe = 65;
  CHECK_THROWS_AS(harness::check_guards(spec), Error);
}

TEST_CASE("oracles on the station example") {
  const auto space = fixtures::stations_space();
  const auto g = fixtures::stations_target(space);
  CHECK(harness::oracle_closure(space, g) == aura_closure(space, g));
  CHECK(harness::oracle_interior(space, g) == aura_interior(space, g));
  const auto s = fixtures::chain_space();
  CHECK(harness::oracle_closure(s, fixtures::chain_set(s, {"3"})) == fixtures::chain_set(s, {"2", "3"}));
}

TEST_CASE("random generation is deterministic per seed") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 50; ++i) {
    const auto sa = harness::random_space(a, 4, 2, harness::FamilyTopology::Generated);
    const auto sb = harness::random_space(b, 4, 2, harness::FamilyTopology::Generated);
    CHECK(sa == sb);
  }
}

TEST_CASE("small exhaustive suite has no law failures") {
  harness::SpaceFamilySpec spec;
  spec.max_universe = 2;
  spec.max_params = 2;
  const auto r = harness::run_law_suite(spec);
  CHECK(r.total_failures() == 0);
  CHECK(r.spaces == 1 + 1 + 4 + 16);
  for (const auto* name : {"closure.additive", "interior.multiplicative", "duality", "oracle.closure",
                           "kuratowski.idempotent", "hierarchy.kuratowski", "union-closure.pre",
                           "decomposition.kuratowski-set-level", "separation.t1-iff-t2", "rough.sandwich"}) {
    INFO(name);
    const auto* law = r.law(name);
    REQUIRE(law != nullptr);
    CHECK(law->checks > 0);
    CHECK(law->failures == 0);
  }
  REQUIRE(r.remark("alpha-intersection.kuratowski") != nullptr);
  CHECK(r.law("no-such-law") == nullptr);

  // Identical runs give identical reports.
  const auto again = harness::run_law_suite(spec);
  CHECK(io::dump(io::to_json(r)) == io::dump(io::to_json(again)));
}

TEST_CASE("law groups can be selected") {
  harness::SpaceFamilySpec spec;
  spec.max_universe = 2;
  spec.max_params = 1;
  spec.laws = {"closure"};
  spec.strictness = false;
  const auto r = harness::run_law_suite(spec);
  for (const auto& law : r.laws) CHECK(law.group == "closure");
  CHECK_FALSE(r.laws.empty());
}

TEST_CASE("sampled suite on larger spaces") {
  harness::SpaceFamilySpec spec;
  spec.max_universe = 8;
  spec.max_params = 4;
  spec.sampled_spaces = 300;
  spec.seed = 11;
  spec.topology = harness::FamilyTopology::Generated;
  const auto r = harness::run_law_suite(spec);
  CHECK(r.spaces == 300);
  CHECK(r.total_failures() == 0);
  const auto again = harness::run_law_suite(spec);
  CHECK(io::dump(io::to_json(r)) == io::dump(io::to_json(again)));
  spec.seed = 12;
  CHECK(io::dump(io::to_json(harness::run_law_suite(spec))) != io::dump(io::to_json(r)));
}

TEST_CASE("witness replay") {
  harness::Witness w;
  w.law = "alpha=>pre";
  w.universe = 3;
  w.params = 1;
  w.scope = {0b011, 0b110, 0b100};
  w.sets = {{0b011}};
  const auto p = classify(harness::replay_space(w), harness::replay_set(w, 0));
  CHECK(harness::replay_strictness(w) == (p.pre && !p.alpha));
  w.law = "unknown";
  CHECK_FALSE(harness::replay_strictness(w));
}
