#include <algorithm>
#include <set>

#include "doctest.h"
#include "skewlab/brace.hpp"
#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/holomorph.hpp"

using namespace skewlab;
using namespace skewlab::catalog;

namespace {

// the nontrivial brace on C4: lam = [id, inv, id, inv]
SkewBrace c4_twisted() {
  const auto tables = enumerate_regular_subgroups(cyclic(4));
  REQUIRE(tables.size() == 2);
  REQUIRE(tables[1].lam() == std::vector<int>{0, 1, 0, 1});
  return from_regular_subgroup(tables[1], "C4-twisted");
}

}  // namespace

TEST_CASE("trivial braces") {
  const SkewBrace b = SkewBrace::trivial(symmetric(3));
  CHECK(b.order() == 6);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      CHECK(b.add(x, y) == b.mul(x, y));
      CHECK(b.lambda(x, y) == y);
    }
  }
  // socle of a trivial brace is the additive center
  CHECK(socle(b) == center(symmetric(3)).elements());
  const SkewBrace a = SkewBrace::trivial(cyclic(6));
  CHECK(socle(a).size() == 6);
}

TEST_CASE("brace construction validates the compatibility law") {
  // additive C4 against a relabeled C4 (roles of 1 and 2 swapped): a valid
  // group, but lambda_2 would send the involution 2 to the order-4 element 3
  const FiniteGroup c4 = cyclic(4);
  const FiniteGroup relabeled(
      std::vector<std::vector<int>>{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 1, 0},
                                    {3, 2, 0, 1}},
      "C4'");
  CHECK_THROWS_AS(SkewBrace(c4, relabeled), InputError);

  // the Klein xor table on the same carrier, by contrast, is a skew brace
  const FiniteGroup xor4(
      std::vector<std::vector<int>>{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1},
                                    {3, 2, 1, 0}},
      "V4");
  CHECK_NOTHROW(SkewBrace(c4, xor4));
}

TEST_CASE("brace from a regular subgroup") {
  const SkewBrace b = c4_twisted();
  CHECK(b.order() == 4);
  CHECK(b.name() == "C4-twisted");
  CHECK(b.provenance().find("lam=[0,1,0,1]") != std::string::npos);

  // a · b = a + lam_a(b); lam_1 is inversion
  CHECK(b.mul(1, 1) == b.add(1, 3));
  CHECK(b.mul(1, 1) == 0);
  CHECK(b.mul_inverse(1) == 1);
  CHECK(b.lambda(1, 1) == 3);
  CHECK(b.lambda_perm(1) == std::vector<int>{0, 3, 2, 1});

  // multiplicative group is the Klein group
  CHECK(is_isomorphic(b.multiplicative_group(),
                      direct_product(cyclic(2), cyclic(2))));
  CHECK(is_z_group(b.additive_group()));
  CHECK_FALSE(is_z_group(b.multiplicative_group()));
}

TEST_CASE("brace from an exact factorization") {
  const FiniteGroup a4 = alternating4();
  const Subgroup v4 = sylow(a4, 2);
  const Subgroup c3 = sylow(a4, 3);
  const SkewBrace b = from_exact_factorization(a4, v4, c3);
  CHECK(b.order() == 12);
  CHECK(b.additive_group().same_table(a4));
  CHECK_FALSE(is_isomorphic(b.additive_group(), b.multiplicative_group()));

  // A ∩ C must be trivial and |A||C| = |G|
  CHECK_THROWS_AS(from_exact_factorization(a4, v4, v4), InputError);
  CHECK_THROWS_AS(from_exact_factorization(a4, v4, Subgroup(a4, {0})),
                  InputError);
  // subgroups of a different parent are a caller bug
  const FiniteGroup d8 = dihedral(8);
  CHECK_THROWS_AS(
      from_exact_factorization(a4, Subgroup(d8, {0, 2}), c3),
      ContractViolation);
}

TEST_CASE("subbraces and ideals") {
  const SkewBrace b = c4_twisted();
  CHECK(is_subbrace(b, {0, 2}));
  CHECK_FALSE(is_subbrace(b, {0, 1}));
  CHECK(is_ideal(b, {0, 2}));
  CHECK(is_ideal(b, {0, 1, 2, 3}));
  CHECK(is_ideal(b, {0}));

  // in the trivial brace on S3 the ideals are the normal subgroups
  const SkewBrace t = SkewBrace::trivial(symmetric(3));
  std::vector<int> a3;
  for (int x = 0; x < 6; ++x)
    if (symmetric(3).element_order(x) != 2) a3.push_back(x);
  std::sort(a3.begin(), a3.end());
  CHECK(is_ideal(t, a3));
  int refl = 1;
  while (symmetric(3).element_order(refl) != 2) ++refl;
  CHECK_FALSE(is_ideal(t, {0, refl}));
}

TEST_CASE("socle") {
  const SkewBrace b = c4_twisted();
  CHECK(socle(b) == std::vector<int>{0, 2});
}

TEST_CASE("quotient braces") {
  const SkewBrace b = c4_twisted();
  const BraceQuotient q = quotient_brace(b, {0, 2});
  CHECK(q.brace.order() == 2);
  CHECK(q.coset_of.size() == 4);
  CHECK(q.coset_of[0] == q.coset_of[2]);
  CHECK(q.coset_of[1] == q.coset_of[3]);
  CHECK(q.coset_of[0] != q.coset_of[1]);

  CHECK_THROWS_AS(quotient_brace(b, {0, 1}), ContractViolation);
}

TEST_CASE("minimal prime ideals") {
  const SkewBrace b = c4_twisted();
  const auto ideals = minimal_prime_ideals(b);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0] == std::vector<int>{0, 2});
}

TEST_CASE("supersolvable chains") {
  const SkewBrace b = c4_twisted();
  const auto chain = supersolvable_chain(b);
  REQUIRE(chain.has_value());
  CHECK(verify_ideal_chain(b, *chain));
  REQUIRE(chain->factor_orders.size() == 2);
  CHECK(chain->factor_orders[0] == 2);
  CHECK(chain->factor_orders[1] == 2);
  REQUIRE(chain->levels.size() == 3);
  CHECK(chain->levels.front() == std::vector<int>{0});
  CHECK(chain->levels.back().size() == 4);

  // a tampered chain fails verification
  IdealChain broken = *chain;
  broken.factor_orders[0] = 3;
  CHECK_FALSE(verify_ideal_chain(b, broken));

  // order-1 braces admit the empty chain
  const SkewBrace point = SkewBrace::trivial(cyclic(1));
  const auto tiny = supersolvable_chain(point);
  REQUIRE(tiny.has_value());
  CHECK(tiny->factor_orders.empty());
  CHECK(verify_ideal_chain(point, *tiny));
}

TEST_CASE("braces satisfy the defining identities") {
  // spot-check the compatibility law and the lambda homomorphism on every
  // brace with additive D8
  const auto tables = enumerate_regular_subgroups(dihedral(8));
  CHECK(tables.size() == 20);
  for (const auto& t : tables) {
    const SkewBrace b = from_regular_subgroup(t);
    const int n = b.order();
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          // a·(x + y) = a·x − a + a·y
          CHECK(b.mul(a, b.add(x, y)) ==
                b.add(b.add(b.mul(a, x), b.neg(a)), b.mul(a, y)));
          // λ_{a·x} = λ_a ∘ λ_x
          CHECK(b.lambda(b.mul(a, x), y) == b.lambda(a, b.lambda(x, y)));
        }
      }
    }
  }
}
