#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlab/brace.hpp"
#include "skewlab/group.hpp"
#include "skewlab/holomorph.hpp"

namespace skewlab {

enum class Verdict { verified, violated, partial };
std::string to_string(Verdict v);

struct SkipRecord {
  int order = 0;
  std::string group;
  std::string reason;
};

struct WitnessRecord {
  int order = 0;
  std::string group;
  std::string reason;
  std::string brace_document;  // empty for pair-shaped cases
};

struct OrderTally {
  int order = 0;
  long long groups = 0;
  long long cases = 0;
  long long skipped = 0;
  long long violations = 0;
  double seconds = 0.0;  // presentation only, never serialized
};

/// Outcome of one sweep.  Everything except the timing fields is
/// deterministic and round-trips through the canonical document bytes.
struct SweepReport {
  std::string statement;
  std::string case_label;  // "braces" or "pairs"
  int max_order = 0;
  std::vector<int> excluded_orders;
  long long structural_cases = 0;
  std::vector<OrderTally> per_order;
  std::vector<SkipRecord> skips;
  std::vector<WitnessRecord> witnesses;
  double total_seconds = 0.0;

  long long total_groups() const;
  long long total_cases() const;
  long long total_skipped() const;
  long long total_violations() const;
  /// violated beats partial beats verified.
  Verdict verdict() const;
};

struct SweepOptions {
  int workers = 1;
  EngineBudget budget;
  std::vector<int> exclude_orders;
  bool structural_checks = true;
};

/// Braces whose additive group has all Sylow subgroups cyclic, orders
/// 1..max_order: the multiplicative group must be solvable and almost Sylow
/// cyclic.
SweepReport verify_theorem_a(int max_order, const SweepOptions& options = {});

/// Same population: the brace must carry an ideal chain with prime factors,
/// and the multiplicative group must have a normal 2-complement.
SweepReport verify_theorem_b(int max_order, const SweepOptions& options = {});

/// Braces over every group of odd order 1..max_order (bound 63): the additive
/// group has all Sylow subgroups cyclic exactly when the multiplicative one
/// does.
SweepReport verify_theorem_c(int max_order, const SweepOptions& options = {});

/// For [G : S] = q^r a prime power, a Sylow q-subgroup of G acts
/// transitively on the left cosets of S.
bool check_sylow_transitivity_lemma(const FiniteGroup& g, const Subgroup& s);
/// For solvable G with cyclic Fitting subgroup, the derived subgroup lies
/// inside the Fitting subgroup.
bool check_fitting_lemma(const FiniteGroup& g);

/// Deterministic catalog population used by the lemma sweeps.
std::vector<FiniteGroup> lemma_catalog(int max_order);

/// check_sylow_transitivity_lemma over every (catalog group, prime-power
/// index subgroup) pair up to max_order.
SweepReport sweep_sylow_transitivity(int max_order, const SweepOptions& options = {});
/// check_fitting_lemma over every solvable catalog group up to max_order.
SweepReport sweep_fitting_commutator(int max_order, const SweepOptions& options = {});

/// The two reference braces:
///  - additive A4 with abelian multiplicative group C2xC2xC3, from the exact
///    factorization of A4 by its Sylow 2-subgroup and a C3;
///  - additive D8 with cyclic multiplicative group C8, found in the holomorph
///    of D8.
std::vector<SkewBrace> build_example_braces();

}  // namespace skewlab
