#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/group.hpp"
#include "skewlab/holomorph.hpp"

namespace skewlab {

/// A skew brace: one carrier 0..n-1 with an additive group (B, +) and a
/// multiplicative group (B, ·) sharing the identity 0 and satisfying
///   a·(b + c) = a·b − a + a·c.
/// Construction validates both tables, the compatibility law above, and that
/// λ_a(b) = −a + a·b defines a homomorphism (B, ·) → Aut(B, +).
class SkewBrace {
 public:
  SkewBrace(FiniteGroup additive, FiniteGroup multiplicative,
            std::string name = "", std::string provenance = "");

  /// Both structures equal to g; the law reduces to an identity.
  static SkewBrace trivial(const FiniteGroup& g);

  int order() const noexcept;
  const std::string& name() const noexcept;
  const std::string& provenance() const noexcept;
  const FiniteGroup& additive_group() const noexcept;
  const FiniteGroup& multiplicative_group() const noexcept;

  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int mul_inverse(int a) const;
  int lambda(int a, int b) const;  // λ_a(b)
  const std::vector<int>& lambda_perm(int a) const;

  SkewBrace renamed(std::string name, std::string provenance) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Brace on the base of the regular subgroup: a + b is the base product and
/// a·b = a + λ_a(b) reads the automorphism off the graph.
SkewBrace from_regular_subgroup(const LambdaTable& table, std::string name = "");

/// Brace from an exact factorization G = A∘C (A ∩ C = {0}, |A||C| = |G|).
/// Writing g = a∘c uniquely, the multiplication transports through the
/// decomposition as g1·g2 = a1∘a2∘c2∘c1, with λ_g = conjugation by c⁻¹; for
/// abelian C this is the plain direct-product transport.
SkewBrace from_exact_factorization(const FiniteGroup& g, const Subgroup& a,
                                   const Subgroup& c);

/// Closed under +, negation, · and multiplicative inverse.
bool is_subbrace(const SkewBrace& b, const std::vector<int>& subset);
/// Subbrace, normal in both groups, and λ_a-invariant for every a.
bool is_ideal(const SkewBrace& b, const std::vector<int>& subset);

/// ker λ ∩ Z(B, +), sorted.  Always an ideal.
std::vector<int> socle(const SkewBrace& b);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<int> coset_of;  // carrier index -> quotient index
};

/// Requires an ideal; additive and multiplicative cosets coincide and a
/// mismatch raises InternalError.  Cosets are indexed by least representative.
BraceQuotient quotient_brace(const SkewBrace& b, const std::vector<int>& ideal);

/// Ideals of prime order (each is minimal among nonzero ideals), sorted.
std::vector<std::vector<int>> minimal_prime_ideals(const SkewBrace& b);

/// Ascending chain {0} = I_0 < I_1 < ... < I_m = B of ideals of B with
/// prime-order factors I_{j+1} / I_j.
struct IdealChain {
  std::vector<std::vector<int>> levels;
  std::vector<int> factor_orders;
};

/// Builds a chain by splitting off a prime ideal and recursing on the
/// quotient; std::nullopt when no chain exists.
std::optional<IdealChain> supersolvable_chain(const SkewBrace& b);

/// Every level is an ideal of b, strictly ascending from {0} to the whole
/// carrier, with prime factor orders matching the chain.
bool verify_ideal_chain(const SkewBrace& b, const IdealChain& chain);

}  // namespace skewlab
