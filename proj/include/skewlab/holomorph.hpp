#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skewlab/group.hpp"

namespace skewlab {

/// Resource limits for enumeration.  The node cap and element cap are
/// deterministic: a run that exceeds them fails identically on every rerun.
/// The wall-clock cap is off by default because it aborts nondeterministically.
struct EngineBudget {
  long long max_holomorph_elements = 1'000'000;
  long long max_search_nodes = 50'000'000;  // 0 = unlimited
  double max_seconds = 0.0;                 // 0 = unlimited
  /// Reads SKEWLAB_MAX_HOL_ELEMENTS, SKEWLAB_MAX_SEARCH_NODES,
  /// SKEWLAB_MAX_SECONDS from the environment over the defaults.
  static EngineBudget from_env();
};

/// The automorphisms of a base group, indexed 0..k-1 in lexicographic image
/// order (0 is the identity), with composition resolved through a cache.
class AutomorphismTable {
 public:
  explicit AutomorphismTable(const FiniteGroup& base);

  const FiniteGroup& base() const noexcept;
  int size() const noexcept;
  int apply(int f, int x) const;           // f(x)
  const std::vector<int>& perm(int f) const;
  int compose(int f, int g) const;         // index of f∘g (g applied first)
  int inverse(int f) const;
  int order_of(int f) const;
  int index_of(const std::vector<int>& perm) const;  // InternalError if absent

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

std::shared_ptr<const AutomorphismTable> make_automorphism_table(const FiniteGroup& base);

struct HolomorphElement {
  int x = 0;  // base element
  int f = 0;  // automorphism index

  friend bool operator==(const HolomorphElement& a, const HolomorphElement& b) {
    return a.x == b.x && a.f == b.f;
  }
  friend bool operator<(const HolomorphElement& a, const HolomorphElement& b) {
    return a.x != b.x ? a.x < b.x : a.f < b.f;
  }
};

/// Hol(H) = H ⋊ Aut(H) with product (x, f)(y, g) = (x∘f(y), f∘g), acting on
/// H by (x, f)·h = x∘f(h).  Stored implicitly; |Hol| can exceed the dense
/// table bound, so a FiniteGroup materialization is offered only when it fits.
class HolomorphGroup {
 public:
  explicit HolomorphGroup(FiniteGroup base, const EngineBudget& budget = {});
  HolomorphGroup(FiniteGroup base, std::shared_ptr<const AutomorphismTable> auts,
                 const EngineBudget& budget = {});

  const FiniteGroup& base() const noexcept;
  const AutomorphismTable& auts() const noexcept;
  std::shared_ptr<const AutomorphismTable> auts_ptr() const noexcept;
  long long size() const noexcept;

  HolomorphElement identity() const noexcept;
  HolomorphElement product(const HolomorphElement& a, const HolomorphElement& b) const;
  HolomorphElement inverse(const HolomorphElement& a) const;
  int act(const HolomorphElement& a, int h) const;

  /// Dense Cayley table when size() fits the FiniteGroup bound; element
  /// (x, f) gets index x * |Aut| + f.
  std::optional<FiniteGroup> as_finite_group() const;

 private:
  FiniteGroup base_;
  std::shared_ptr<const AutomorphismTable> auts_;
};

HolomorphGroup holomorph(const FiniteGroup& base, const EngineBudget& budget = {});

/// A regular subgroup of Hol(H) in graph form: element x of H pairs with
/// automorphism index lam[x], so the subgroup is {(x, lam[x]) : x in H}.
/// Construction checks lam[0] = identity and closure of the graph.
class LambdaTable {
 public:
  LambdaTable(std::shared_ptr<const AutomorphismTable> auts, std::vector<int> lam);

  const FiniteGroup& base() const noexcept;
  const AutomorphismTable& auts() const noexcept;
  std::shared_ptr<const AutomorphismTable> auts_ptr() const noexcept;
  const std::vector<int>& lam() const noexcept;

  std::vector<HolomorphElement> elements() const;

  friend bool operator==(const LambdaTable& a, const LambdaTable& b) {
    return a.lam_ == b.lam_ && a.base().same_table(b.base());
  }
  friend bool operator<(const LambdaTable& a, const LambdaTable& b) {
    return a.lam_ < b.lam_;
  }

 private:
  std::shared_ptr<const AutomorphismTable> auts_;
  std::vector<int> lam_;
};

/// Subgroup test plus regularity of the action on the base: the orbit of 0
/// must cover H with trivial stabilizers.  For |S| = |H| this reduces to
/// transitivity, and the implementation verifies that reduction.
bool is_regular_subgroup(const HolomorphGroup& hol,
                         const std::vector<HolomorphElement>& elements);

/// All regular subgroups of Hol(H) in graph form, sorted by lam vector.
/// Backtracking over the graph map with forced-closure propagation; an
/// exceeded budget throws ResourceError.
std::vector<LambdaTable> enumerate_regular_subgroups(const HolomorphGroup& hol,
                                                     const EngineBudget& budget = {},
                                                     int workers = 1);
std::vector<LambdaTable> enumerate_regular_subgroups(const FiniteGroup& base,
                                                     const EngineBudget& budget = {},
                                                     int workers = 1);

/// Independent oracle: materializes Hol(H) (requires |Hol| ≤ 512), walks the
/// full subgroup lattice bottom-up keeping orders dividing |H|, and filters
/// the regular ones.  Same output contract as enumerate_regular_subgroups.
std::vector<LambdaTable> brute_force_regular_subgroups(const HolomorphGroup& hol);

/// One representative per orbit of the conjugation action of Aut(H) on
/// regular subgroups: lam'[g(x)] = g∘lam[x]∘g⁻¹.  Keeps the lexicographically
/// smallest lam of each orbit, sorted.
std::vector<LambdaTable> dedupe_by_aut_conjugacy(const std::vector<LambdaTable>& tables);

}  // namespace skewlab
