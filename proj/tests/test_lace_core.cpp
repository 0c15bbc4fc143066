#include <doctest.h>

#include <random>

#include "lace/error.hpp"
#include "lace/lace_core.hpp"
#include "oracles.hpp"

using namespace lace;
using lace::testing::compatible_oracle;

namespace {

PropSubset S(std::initializer_list<int> xs) {
  PropSubset s;
  for (int x : xs) s = s.with(x);
  return s;
}

/// Brun labels (1-based) to indices.
PropSubset labels(std::initializer_list<int> xs) {
  PropSubset s;
  for (int x : xs) s = s.with(x - 1);
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lace::Error");
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("PropSubset basics") {
  const PropSubset s = PropSubset::from_indices({5, 0, 3}, 6);
  CHECK(s.members() == std::vector<int>{0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(*s.min() == 0);
  CHECK(*s.max() == 5);
  CHECK(to_string(s) == "{0,3,5}");
  CHECK(code_of([] { PropSubset::from_indices({6}, 6); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { PropSubset::from_indices({1, 1}, 6); }) == ErrorCode::invalid_argument);
  CHECK(canonical_less(S({3}), S({0, 1})));
  CHECK(canonical_less(S({0, 4}), S({1, 2})));

  int visited = 0;
  for_each_in_interval(S({1}), S({0, 1, 3}), [&](PropSubset x) {
    CHECK(S({1}).subset_of(x));
    CHECK(x.subset_of(S({0, 1, 3})));
    ++visited;
  });
  CHECK(visited == 4);
}

TEST_CASE("PropertyUniverse validates labels and size") {
  CHECK(code_of([] { PropertyUniverse(3, {"a"}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { PropertyUniverse(65); }) == ErrorCode::limit_exceeded);
  CHECK(code_of([] { PropertyUniverse(2).check(S({2})); }) == ErrorCode::out_of_range);
}

TEST_CASE("apply: one example per kind") {
  CHECK(apply(LaceMap::identity(4), S({1, 3})) == S({1, 3}));
  CHECK(apply(LaceMap::bonferroni(7, 2), S({2, 5, 6})) == S({2, 5}));

  // Brun (5,3,3,1,1), S = {5,4}: i1=5<=5, i2=4>3, cut at s=2.
  const LaceMap brun = LaceMap::brun(BrunThresholds({5, 3, 3, 1, 1}));
  CHECK(apply(brun, labels({5, 4})) == labels({5, 4}));
  // Independent rule: decreasing labels, first i_j > N_j.
  const std::vector<int> thresholds{5, 3, 3, 1, 1};
  for (std::uint64_t m = 0; m < 32; ++m) {
    std::vector<int> desc;
    for (int p = 4; p >= 0; --p) {
      if ((m >> p) & 1U) desc.push_back(p + 1);
    }
    PropSubset expected(m);
    PropSubset prefix;
    for (std::size_t j = 0; j < desc.size(); ++j) {
      prefix = prefix.with(desc[j] - 1);
      if (desc[j] > thresholds[j]) {
        expected = prefix;
        break;
      }
    }
    CHECK(apply(brun, PropSubset(m)) == expected);
  }
}

TEST_CASE("apply rejects subsets outside the universe") {
  CHECK(code_of([] { apply(LaceMap::identity(3), S({3})); }) == ErrorCode::out_of_range);
}

TEST_CASE("is_lace") {
  CHECK(is_lace(LaceMap::identity(5), S({0, 2, 4})));
  const LaceMap bonf = LaceMap::bonferroni(5, 2);
  CHECK_FALSE(is_lace(bonf, S({0, 1, 2})));
  CHECK(apply(bonf, S({0, 1, 2})) == S({0, 1}));
  CHECK(is_lace(bonf, S({0, 4})));
}

TEST_CASE("compatible_set examples") {
  CHECK(compatible_set(LaceMap::identity(4), S({1, 2})).empty());
  // P={1..5}, L={1,3} -> {4,5}
  CHECK(compatible_set(LaceMap::bonferroni(5, 2), labels({1, 3})) == labels({4, 5}));
  // Brun unsaturated L={5,4} -> {3,2,1}
  const LaceMap brun = LaceMap::brun(BrunThresholds({5, 3, 3, 1, 1}));
  CHECK(compatible_set(brun, labels({5, 4})) == labels({3, 2, 1}));
  CHECK(code_of([&] { compatible_set(brun, labels({5, 4, 3})); }) == ErrorCode::not_a_lace);
}

TEST_CASE("closed-form compatible sets equal the definitional scan") {
  std::mt19937_64 rng(11);
  std::vector<LaceMap> maps;
  for (int n = 0; n <= 8; ++n) {
    maps.push_back(LaceMap::identity(n));
    for (int k = 1; k <= n + 1; ++k) maps.push_back(LaceMap::bonferroni(n, k));
    for (int r = 0; r < 4 && n > 0; ++r) {
      maps.push_back(LaceMap::brun(lace::testing::random_brun_chain(rng, n)));
    }
  }
  for (const LaceMap& map : maps) {
    for (std::uint64_t l : lace::testing::fixed_points(map)) {
      CHECK(compatible_set(map, PropSubset(l)) == compatible_oracle(map, PropSubset(l)));
    }
  }
}

TEST_CASE("verify_axioms: builtins pass, broken maps yield their witness") {
  CHECK(verify_axioms(LaceMap::identity(6)).pass);
  CHECK(verify_axioms(LaceMap::brydges_spencer(4)).pass);

  const AxiomReport ii = verify_axioms(lace::testing::broken_interval_map());
  REQUIRE_FALSE(ii.pass);
  CHECK(*ii.violated == Axiom::interval);
  REQUIRE(ii.witness.size() == 4);
  CHECK(ii.witness[0] == std::pair<std::string, PropSubset>{"S", S({0, 1})});
  CHECK(ii.witness[1] == std::pair<std::string, PropSubset>{"l(S)", S({0})});
  CHECK(ii.witness[2] == std::pair<std::string, PropSubset>{"G", S({0})});
  CHECK(ii.witness[3] == std::pair<std::string, PropSubset>{"l(G)", S({})});

  const AxiomReport i = verify_axioms(lace::testing::broken_containment_map());
  REQUIRE_FALSE(i.pass);
  CHECK(*i.violated == Axiom::containment);
  CHECK(i.witness[0].second == S({}));
  CHECK(i.witness[1].second == S({0}));

  const AxiomReport iii = verify_axioms(lace::testing::broken_union_map());
  REQUIRE_FALSE(iii.pass);
  CHECK(*iii.violated == Axiom::union_closure);
  CHECK(iii.witness[0].second == S({0}));
  CHECK(iii.witness[1].second == S({1}));
  CHECK(iii.witness[4].second == S({0, 1}));
}

TEST_CASE("exhaustive operations refuse above the limit") {
  const LaceMap big = LaceMap::identity(13);
  CHECK(code_of([&] { verify_axioms(big); }) == ErrorCode::limit_exceeded);
  CHECK(code_of([&] { fiber_interval_check(big); }) == ErrorCode::limit_exceeded);
  CHECK(code_of([&] { enumerate_laces_generic(big); }) == ErrorCode::limit_exceeded);
  Limits wide;
  wide.exhaustive = 13;
  CHECK(verify_axioms(big, wide).pass);
  // Closed forms are not bound by the exhaustive limit.
  CHECK(enumerate_laces(big).size() == 8192);
}

TEST_CASE("table maps must be total and in range") {
  std::vector<std::pair<PropSubset, PropSubset>> entries{{S({}), S({})}, {S({0}), S({0})}};
  CHECK(LaceMap::table(1, entries).size() == 1);
  entries.pop_back();
  CHECK(code_of([&] { LaceMap::table(1, entries); }) == ErrorCode::invalid_argument);
  entries.push_back({S({}), S({})});
  CHECK(code_of([&] { LaceMap::table(1, entries); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { LaceMap::table(2, [](PropSubset) { return PropSubset(4); }); }) ==
        ErrorCode::out_of_range);
  CHECK(code_of([] { LaceMap::table(17, [](PropSubset s) { return s; }); }) ==
        ErrorCode::limit_exceeded);
}

TEST_CASE("enumerate_laces examples") {
  const auto id = enumerate_laces(LaceMap::identity(4));
  CHECK(id.size() == 16);
  for (const Lace& l : id) CHECK(l.saturated());

  const auto bonf = enumerate_laces(LaceMap::bonferroni(4, 2));
  CHECK(bonf.size() == 1 + 4 + 6);
  for (const Lace& l : bonf) CHECK(l.members.size() <= 2);

  const LaceMap brun = LaceMap::brun(BrunThresholds({3, 1, 1}));
  CHECK(enumerate_laces(brun) == enumerate_laces_generic(brun));
}

TEST_CASE("enumerate_laces order is cardinality then lexicographic") {
  const auto laces = enumerate_laces(LaceMap::identity(3));
  std::vector<std::vector<int>> got;
  for (const Lace& l : laces) got.push_back(l.members.members());
  const std::vector<std::vector<int>> want{{},     {0},    {1},    {2},
                                           {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  CHECK(got == want);
}

TEST_CASE("fiber_interval_check examples") {
  CHECK(fiber_interval_check(LaceMap::identity(5)));
  CHECK(fiber_interval_check(LaceMap::bonferroni(3, 1)));
  CHECK_FALSE(fiber_interval_check(lace::testing::broken_union_map()));
  CHECK_FALSE(fiber_interval_check(lace::testing::broken_interval_map()));
}

TEST_CASE("properties: idempotence, containment, fibers, lace count") {
  std::mt19937_64 rng(2024);
  std::vector<LaceMap> maps;
  for (int n = 0; n <= 7; ++n) {
    maps.push_back(LaceMap::identity(n));
    maps.push_back(LaceMap::bonferroni(n, 1 + static_cast<int>(rng() % 3)));
    if (n > 0) maps.push_back(LaceMap::brun(lace::testing::random_brun_chain(rng, n)));
    for (int r = 0; r < 3; ++r) maps.push_back(lace::testing::random_interval_map(rng, n));
  }
  maps.push_back(LaceMap::brydges_spencer(3));

  for (const LaceMap& map : maps) {
    CAPTURE(map.kind_name());
    CAPTURE(map.size());
    REQUIRE(verify_axioms(map).pass);
    CHECK(fiber_interval_check(map));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << map.size()); ++s) {
      const PropSubset l = apply(map, PropSubset(s));
      CHECK(l.subset_of(PropSubset(s)));
      CHECK(apply(map, l) == l);
    }
    std::uint64_t covered = 0;
    for (const Lace& l : enumerate_laces(map)) {
      CHECK(l.members.disjoint(l.compatible));
      std::uint64_t fiber = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << map.size()); ++s) {
        fiber += apply(map, PropSubset(s)) == l.members ? 1 : 0;
      }
      CHECK(fiber == (std::uint64_t{1} << l.compatible.size()));
      covered += fiber;
    }
    CHECK(covered == (std::uint64_t{1} << map.size()));
  }
}
