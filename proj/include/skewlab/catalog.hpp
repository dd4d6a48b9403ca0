#pragma once

#include <string>
#include <vector>

#include "skewlab/group.hpp"

namespace skewlab::catalog {

/// Parameters of the metacyclic presentation
///   ⟨a, b | a^m = b^n = 1, b a b⁻¹ = a^r⟩
/// subject to gcd(m, n) = 1, gcd(m, r - 1) = 1 and r^n ≡ 1 (mod m).
/// Every group with all Sylow subgroups cyclic arises this way.
struct ZGroupParams {
  int m = 1;
  int n = 1;
  int r = 1;

  /// Throws InputError when the constraints fail or m·n exceeds the
  /// supported order bound.
  void validate() const;
};

FiniteGroup cyclic(int n);
/// Dihedral group of the given (even, ≥ 4) order.
FiniteGroup dihedral(int order);
FiniteGroup quaternion8();
FiniteGroup alternating4();
/// Symmetric group on n ≤ 5 points; elements are the n! permutations in
/// lexicographic order.
FiniteGroup symmetric(int n);

FiniteGroup metacyclic(const ZGroupParams& params);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Semidirect product N ⋊ K.  action[k] must be an automorphism of n for
/// every k, with action[0] the identity and action[k∘k'] = action[k]∘action[k'];
/// a non-homomorphic action throws ContractViolation.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<GroupMap>& action);

/// One representative per isomorphism class of groups of the given order
/// whose Sylow subgroups are all cyclic.  Representatives carry their
/// construction name and are ordered by Cayley table.
std::vector<FiniteGroup> enumerate_z_groups(int order);

/// One representative per isomorphism class of groups of the given odd
/// order n ≤ 63.  Abelian classes come from partition sweeps, nonabelian
/// ones from semidirect products of smaller odd-order groups; order 27 is
/// seeded explicitly because Aut(C3×C3×C3) is too large to sweep.
std::vector<FiniteGroup> groups_of_odd_order(int n);

/// Parses the group document format (see io.hpp) and validates the table.
FiniteGroup load_group(const std::string& document);

/// Looks up a named catalog group: C<n>, D<order>, Q8, A4, S<n>, and
/// direct products written with 'x' such as C2xC2xC3.  Unknown names throw
/// InputError.
FiniteGroup group_by_name(const std::string& name);

/// All permutations of {0..n-1} in lexicographic order (n ≤ 5).
std::vector<std::vector<int>> permutations_lex(int n);
/// Index of a permutation within permutations_lex(n).
int permutation_index(int n, const std::vector<int>& perm);

}  // namespace skewlab::catalog
