#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewlab {

/// A finite group of order at most 128, stored as a dense Cayley table with
/// the identity pinned at index 0.  Construction validates the full set of
/// group axioms (identity row/column, Latin square, associativity) and
/// precomputes inverses and element orders.  Instances are immutable and
/// cheap to copy: copies share the underlying table.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 128;

  /// `flat_table[a * order + b]` is the product a∘b.
  FiniteGroup(int order, std::vector<int> flat_table, std::string name = "");
  explicit FiniteGroup(const std::vector<std::vector<int>>& table,
                       std::string name = "");

  int order() const noexcept;
  const std::string& name() const noexcept;
  /// Same group, different display name.  Shares the table.
  FiniteGroup with_name(std::string name) const;

  int op(int a, int b) const;
  int inverse(int a) const;
  int element_order(int a) const;
  int power(int a, long long k) const;  // a^k, k may be negative
  int conjugate(int g, int a) const;    // g∘a∘g⁻¹
  int commutator(int a, int b) const;   // a∘b∘a⁻¹∘b⁻¹

  bool is_abelian() const;
  const std::vector<int>& flat_table() const noexcept;

  /// Multiset of element orders as sorted (order, count) pairs.
  std::vector<std::pair<int, int>> order_profile() const;
  /// Conjugacy class sizes, sorted ascending.
  std::vector<int> conjugacy_class_sizes() const;

  /// True when the two handles have equal orders and equal tables
  /// (names ignored).
  bool same_table(const FiniteGroup& other) const;

  struct Data;  // defined in group.cpp

 private:
  std::shared_ptr<const Data> d_;
};

/// A validated subgroup: a sorted element list containing 0, closed under
/// the parent's product and inverses.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<int> elements);

  const FiniteGroup& parent() const noexcept;
  const std::vector<int>& elements() const noexcept;
  int order() const noexcept;
  bool contains(int x) const;
  int index() const;  // |parent| / |subgroup|

  bool is_normal() const;
  bool is_trivial() const;   // order 1
  bool is_whole_group() const;

  /// The subgroup as a standalone FiniteGroup.  Element i of the result is
  /// elements()[i]; the identity stays at index 0 because the list is sorted.
  FiniteGroup to_group(std::string name = "") const;

 private:
  FiniteGroup parent_;
  std::vector<int> elements_;
};

/// A homomorphism between two concrete groups, given by its image list.
/// Construction validates images[a∘b] = images[a]∘images[b] and images[0] = 0.
class GroupMap {
 public:
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<int> images);

  const FiniteGroup& source() const noexcept;
  const FiniteGroup& target() const noexcept;
  const std::vector<int>& images() const noexcept;
  int operator()(int x) const;

  bool is_injective() const;
  bool is_bijective() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<int> images_;
};

// ---- subgroup-producing operations ----

/// Smallest subgroup containing the generators.
Subgroup closure(const FiniteGroup& g, const std::vector<int>& generators);

Subgroup derived_subgroup(const FiniteGroup& g);
/// G = G^(0) ≥ G^(1) ≥ ..., listed until it stabilizes (last entry repeated
/// once is omitted; the final entry is the stable term).
std::vector<Subgroup> derived_series(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
/// A Sylow p-subgroup.  Requires p prime and p | |G|.
Subgroup sylow(const FiniteGroup& g, int p);
/// Largest nilpotent normal subgroup (product of the p-cores).
Subgroup fitting(const FiniteGroup& g);
/// Every subgroup, as sorted element lists, ordered by (size, elements).
std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g);

// ---- predicates ----

bool is_solvable(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
/// All Sylow subgroups cyclic.
bool is_z_group(const FiniteGroup& g);
/// Odd Sylows cyclic and the Sylow 2-subgroup trivial, cyclic, or containing
/// a cyclic subgroup of index 2.
bool is_almost_sylow_cyclic(const FiniteGroup& g);
/// Existence of a normal series with cyclic prime-order factors refined
/// through normal subgroups of G itself at every stage.
bool is_supersolvable_group(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
/// A normal subgroup of order |G| / |Sylow_p(G)| exists.
bool has_normal_p_complement(const FiniteGroup& g, int p);
/// Invariance of the subgroup under every automorphism of the parent.
bool is_characteristic(const FiniteGroup& g, const Subgroup& s);

// ---- quotients, isomorphism ----

struct QuotientGroup {
  FiniteGroup group;
  GroupMap projection;  // parent -> quotient
};

/// Requires s normal in g; cosets are indexed by their least representative,
/// sorted so the identity coset sits at 0.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& s);

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
std::optional<GroupMap> find_isomorphism(const FiniteGroup& a,
                                         const FiniteGroup& b);
/// All automorphisms, sorted lexicographically by image list; entry 0 is the
/// identity map.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g);
/// Greedy short generating sequence: each step adds the element whose
/// closure with the part built so far grows fastest.
std::vector<int> generating_sequence(const FiniteGroup& g);
/// Image lists of every homomorphism source -> target, sorted
/// lexicographically.  Exhaustive; intended for small groups.
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& source,
                                                const FiniteGroup& target);

// ---- arithmetic helpers ----

bool is_prime(int n);
std::vector<int> prime_divisors(int n);
/// Largest power of p dividing n.
int p_part(int n, int p);

}  // namespace skewlab
