#include <cstdlib>

#include "doctest.h"
#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/holomorph.hpp"

using namespace skewlab;
using namespace skewlab::catalog;

TEST_CASE("automorphism table of C4") {
  const auto auts = make_automorphism_table(cyclic(4));
  REQUIRE(auts->size() == 2);
  // index 0 identity, index 1 inversion
  CHECK(auts->perm(0) == std::vector<int>{0, 1, 2, 3});
  CHECK(auts->perm(1) == std::vector<int>{0, 3, 2, 1});
  CHECK(auts->apply(1, 3) == 1);
  CHECK(auts->compose(1, 1) == 0);
  CHECK(auts->inverse(1) == 1);
  CHECK(auts->order_of(0) == 1);
  CHECK(auts->order_of(1) == 2);
  CHECK(auts->index_of({0, 3, 2, 1}) == 1);
  CHECK_THROWS_AS(auts->index_of({1, 0, 2, 3}), InternalError);
}

TEST_CASE("holomorph group structure") {
  const HolomorphGroup hol(cyclic(4));
  CHECK(hol.size() == 8);
  CHECK(hol.identity() == HolomorphElement{0, 0});

  // pinned action example: (1, inversion) sends 3 to 1 ∘ inv(3) = 1 + 1 = 2
  CHECK(hol.act(HolomorphElement{1, 1}, 3) == 2);

  // product, inverse, and the action law (ab)·h = a·(b·h) hold on all pairs
  for (int x = 0; x < 4; ++x) {
    for (int f = 0; f < 2; ++f) {
      const HolomorphElement a{x, f};
      const HolomorphElement ai = hol.inverse(a);
      CHECK(hol.product(a, ai) == hol.identity());
      CHECK(hol.product(ai, a) == hol.identity());
      for (int y = 0; y < 4; ++y) {
        for (int g = 0; g < 2; ++g) {
          const HolomorphElement b{y, g};
          for (int h = 0; h < 4; ++h) {
            CHECK(hol.act(hol.product(a, b), h) == hol.act(a, hol.act(b, h)));
          }
        }
      }
    }
  }

  // Hol(C4) = C4 : C2 with inversion, which is the dihedral group of order 8
  const auto dense = hol.as_finite_group();
  REQUIRE(dense.has_value());
  CHECK(is_isomorphic(*dense, dihedral(8)));
}

TEST_CASE("holomorph respects the element budget") {
  EngineBudget tiny;
  tiny.max_holomorph_elements = 10;
  CHECK_THROWS_AS(HolomorphGroup(cyclic(8), tiny), ResourceError);
  CHECK_NOTHROW(HolomorphGroup(cyclic(3), tiny));
}

TEST_CASE("lambda table validation") {
  const auto auts = make_automorphism_table(cyclic(4));
  CHECK_NOTHROW(LambdaTable(auts, {0, 0, 0, 0}));
  CHECK_NOTHROW(LambdaTable(auts, {0, 1, 0, 1}));
  CHECK_THROWS_AS(LambdaTable(auts, {1, 0, 0, 0}), InputError);  // lam[0] != id
  CHECK_THROWS_AS(LambdaTable(auts, {0, 1, 0, 0}), InputError);  // not closed
  CHECK_THROWS_AS(LambdaTable(auts, {0, 0, 0}), InputError);     // wrong length
  CHECK_THROWS_AS(LambdaTable(auts, {0, 2, 0, 2}), InputError);  // out of range
}

TEST_CASE("regular subgroup recognition") {
  const HolomorphGroup hol(cyclic(4));
  // right translations {(x, id)} form a regular subgroup
  std::vector<HolomorphElement> translations;
  for (int x = 0; x < 4; ++x) translations.push_back({x, 0});
  CHECK(is_regular_subgroup(hol, translations));

  // the point stabilizer {(0, f)} is a subgroup but has a global fixed point
  std::vector<HolomorphElement> stabilizer{{0, 0}, {0, 1}};
  CHECK_FALSE(is_regular_subgroup(hol, stabilizer));

  // order-2 subgroup generated by (1, inversion): a subgroup, not regular
  std::vector<HolomorphElement> small{{0, 0}, {1, 1}};
  CHECK_FALSE(is_regular_subgroup(hol, small));

  // not closed under the product: (1, id)^2 = (2, id) is missing
  std::vector<HolomorphElement> junk{{0, 0}, {1, 0}};
  CHECK_FALSE(is_regular_subgroup(hol, junk));
}

TEST_CASE("enumeration matches the brute-force oracle on small holomorphs") {
  for (const auto& g : {cyclic(6), symmetric(3), dihedral(8), quaternion8()}) {
    const HolomorphGroup hol(g);
    const auto fast = enumerate_regular_subgroups(hol);
    const auto slow = brute_force_regular_subgroups(hol);
    CHECK_MESSAGE(fast == slow, g.name());
  }
  // the oracle refuses holomorphs beyond its materialization bound
  const HolomorphGroup big(direct_product(direct_product(cyclic(2), cyclic(2)),
                                          cyclic(2)));
  CHECK(big.size() == 1344);
  CHECK_THROWS_AS(brute_force_regular_subgroups(big), ResourceError);
}

TEST_CASE("regular subgroup counts") {
  const std::pair<const char*, int> raw[] = {
      {"C2", 1},  {"C3", 1},  {"C4", 2},      {"C5", 1},  {"C6", 2},
      {"C7", 1},  {"C8", 6},  {"C2xC2", 4},   {"C2xC4", 28}, {"C9", 3},
      {"C10", 2}, {"C12", 6}, {"C3xC3", 9},   {"C16", 16},   {"C32", 28},
  };
  for (const auto& [name, count] : raw) {
    const auto tables = enumerate_regular_subgroups(group_by_name(name));
    CHECK_MESSAGE(static_cast<int>(tables.size()) == count, name);
  }
  CHECK(enumerate_regular_subgroups(symmetric(3)).size() == 8);
  CHECK(enumerate_regular_subgroups(dihedral(8)).size() == 20);
  CHECK(enumerate_regular_subgroups(quaternion8()).size() == 28);
  CHECK(enumerate_regular_subgroups(group_by_name("C2xC2xC2")).size() == 232);
}

TEST_CASE("aut-conjugacy classes") {
  const std::pair<const char*, int> classes[] = {
      {"C4", 2},  {"C8", 5},  {"C2xC2", 2}, {"C2xC4", 14},
      {"C9", 2},  {"C12", 5}, {"C3xC3", 2}, {"C2xC2xC2", 8},
  };
  for (const auto& [name, count] : classes) {
    const auto tables = enumerate_regular_subgroups(group_by_name(name));
    const auto reps = dedupe_by_aut_conjugacy(tables);
    CHECK_MESSAGE(static_cast<int>(reps.size()) == count, name);
    // representatives are a subset of the enumeration, still sorted
    for (std::size_t i = 1; i < reps.size(); ++i)
      CHECK(reps[i - 1].lam() < reps[i].lam());
  }
  CHECK(dedupe_by_aut_conjugacy(
            enumerate_regular_subgroups(symmetric(3))).size() == 4);
  CHECK(dedupe_by_aut_conjugacy(
            enumerate_regular_subgroups(dihedral(8))).size() == 12);
  CHECK(dedupe_by_aut_conjugacy(
            enumerate_regular_subgroups(quaternion8())).size() == 8);

  // mixing tables over different bases is a caller bug
  const auto a = enumerate_regular_subgroups(cyclic(4));
  const auto b = enumerate_regular_subgroups(cyclic(5));
  std::vector<LambdaTable> mixed{a[0], b[0]};
  CHECK_THROWS_AS(dedupe_by_aut_conjugacy(mixed), ContractViolation);
}

TEST_CASE("search node budget aborts deterministically") {
  EngineBudget strict;
  strict.max_search_nodes = 2;
  CHECK_THROWS_AS(
      enumerate_regular_subgroups(direct_product(cyclic(2), cyclic(4)), strict),
      ResourceError);
}

TEST_CASE("worker count does not change enumeration output") {
  for (const auto& g : {dihedral(8), group_by_name("C2xC4")}) {
    const auto serial = enumerate_regular_subgroups(g, {}, 1);
    const auto parallel = enumerate_regular_subgroups(g, {}, 3);
    CHECK(serial == parallel);
  }
}

TEST_CASE("engine budget reads the environment") {
  setenv("SKEWLAB_MAX_HOL_ELEMENTS", "123", 1);
  setenv("SKEWLAB_MAX_SEARCH_NODES", "456", 1);
  setenv("SKEWLAB_MAX_SECONDS", "1.5", 1);
  const EngineBudget budget = EngineBudget::from_env();
  CHECK(budget.max_holomorph_elements == 123);
  CHECK(budget.max_search_nodes == 456);
  CHECK(budget.max_seconds == doctest::Approx(1.5));
  setenv("SKEWLAB_MAX_SEARCH_NODES", "not-a-number", 1);
  CHECK_THROWS_AS(EngineBudget::from_env(), InputError);
  unsetenv("SKEWLAB_MAX_HOL_ELEMENTS");
  unsetenv("SKEWLAB_MAX_SEARCH_NODES");
  unsetenv("SKEWLAB_MAX_SECONDS");
  const EngineBudget defaults = EngineBudget::from_env();
  CHECK(defaults.max_holomorph_elements == 1'000'000);
}
