#include "skewlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/io.hpp"
#include "skewlab/parallel.hpp"

namespace skewlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::violated:
      return "violated";
    case Verdict::partial:
      return "partial";
  }
  throw InternalError("unknown verdict");
}

long long SweepReport::total_groups() const {
  long long total = 0;
  for (const auto& t : per_order) total += t.groups;
  return total;
}

long long SweepReport::total_cases() const {
  long long total = 0;
  for (const auto& t : per_order) total += t.cases;
  return total;
}

long long SweepReport::total_skipped() const {
  long long total = 0;
  for (const auto& t : per_order) total += t.skipped;
  return total;
}

long long SweepReport::total_violations() const {
  long long total = 0;
  for (const auto& t : per_order) total += t.violations;
  return total;
}

Verdict SweepReport::verdict() const {
  if (total_violations() > 0) return Verdict::violated;
  if (total_skipped() > 0) return Verdict::partial;
  return Verdict::verified;
}

namespace {

struct GroupOutcome {
  int order = 0;
  std::string group;
  long long cases = 0;
  long long structural_cases = 0;
  std::vector<WitnessRecord> witnesses;
  std::optional<SkipRecord> skip;
  double seconds = 0.0;
};

// Structural obligations checked per brace alongside the statement itself:
// the socle is an ideal, the quotient by the socle revalidates, and a found
// ideal chain makes both groups supersolvable.
std::vector<std::string> structural_failures(const SkewBrace& brace) {
  std::vector<std::string> failures;
  const std::vector<int> soc = socle(brace);
  if (!is_ideal(brace, soc)) {
    failures.push_back("structural: socle is not an ideal");
    return failures;
  }
  try {
    const BraceQuotient quotient = quotient_brace(brace, soc);
    if (quotient.brace.order() * static_cast<int>(soc.size()) != brace.order()) {
      failures.push_back("structural: socle quotient has the wrong order");
    }
  } catch (const std::exception& e) {
    failures.push_back(std::string("structural: socle quotient failed: ") + e.what());
  }
  const auto chain = supersolvable_chain(brace);
  if (chain) {
    if (!verify_ideal_chain(brace, *chain)) {
      failures.push_back("structural: ideal chain fails verification");
    }
    if (!is_supersolvable_group(brace.additive_group()) ||
        !is_supersolvable_group(brace.multiplicative_group())) {
      failures.push_back("structural: chain exists but a side is not supersolvable");
    }
  }
  return failures;
}

template <typename Checker>
SweepReport run_brace_sweep(const std::string& statement, int max_order,
                            const SweepOptions& options,
                            const std::vector<FiniteGroup>& population,
                            Checker&& checker) {
  const auto started = std::chrono::steady_clock::now();
  SweepReport report;
  report.statement = statement;
  report.case_label = "braces";
  report.max_order = max_order;
  report.excluded_orders = options.exclude_orders;
  std::sort(report.excluded_orders.begin(), report.excluded_orders.end());

  const auto outcomes = parallel_map<GroupOutcome>(
      population.size(), options.workers, [&](std::size_t i) {
        const FiniteGroup& h = population[i];
        const auto group_started = std::chrono::steady_clock::now();
        GroupOutcome outcome;
        outcome.order = h.order();
        outcome.group = h.name();
        try {
          const HolomorphGroup hol(h, options.budget);
          const auto tables = enumerate_regular_subgroups(hol, options.budget, 1);
          int index = 0;
          for (const LambdaTable& table : tables) {
            const SkewBrace brace = from_regular_subgroup(
                table, h.name() + "#" + std::to_string(index));
            ++index;
            ++outcome.cases;
            std::vector<std::string> reasons = checker(brace);
            if (options.structural_checks) {
              ++outcome.structural_cases;
              for (auto& failure : structural_failures(brace)) {
                reasons.push_back(std::move(failure));
              }
            }
            if (!reasons.empty()) {
              std::string joined;
              for (std::size_t r = 0; r < reasons.size(); ++r) {
                if (r) joined += "; ";
                joined += reasons[r];
              }
              outcome.witnesses.push_back(WitnessRecord{
                  h.order(), h.name(), joined, io::serialize_brace(brace)});
            }
          }
        } catch (const ResourceError& e) {
          outcome.skip = SkipRecord{h.order(), h.name(), e.what()};
        }
        outcome.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - group_started)
                .count();
        return outcome;
      });

  for (int order = 1; order <= max_order; ++order) {
    OrderTally tally;
    tally.order = order;
    bool present = false;
    for (const auto& outcome : outcomes) {
      if (outcome.order != order) continue;
      present = true;
      ++tally.groups;
      tally.cases += outcome.cases;
      tally.seconds += outcome.seconds;
      if (outcome.skip) ++tally.skipped;
      tally.violations += static_cast<long long>(outcome.witnesses.size());
    }
    if (present) report.per_order.push_back(tally);
  }
  for (const auto& outcome : outcomes) {
    report.structural_cases += outcome.structural_cases;
    if (outcome.skip) report.skips.push_back(*outcome.skip);
    for (const auto& witness : outcome.witnesses) report.witnesses.push_back(witness);
  }
  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

bool order_excluded(const SweepOptions& options, int order) {
  return std::find(options.exclude_orders.begin(), options.exclude_orders.end(),
                   order) != options.exclude_orders.end();
}

std::vector<FiniteGroup> z_group_population(int max_order, const SweepOptions& options) {
  std::vector<FiniteGroup> population;
  for (int order = 1; order <= max_order; ++order) {
    if (order_excluded(options, order)) continue;
    for (FiniteGroup& g : catalog::enumerate_z_groups(order)) {
      population.push_back(std::move(g));
    }
  }
  return population;
}

std::vector<FiniteGroup> odd_order_population(int max_order, const SweepOptions& options) {
  if (max_order > 63) {
    throw InputError("odd-order sweep bound is 63, got " + std::to_string(max_order));
  }
  std::vector<FiniteGroup> population;
  for (int order = 1; order <= max_order; order += 2) {
    if (order_excluded(options, order)) continue;
    for (FiniteGroup& g : catalog::groups_of_odd_order(order)) {
      population.push_back(std::move(g));
    }
  }
  return population;
}

}  // namespace

SweepReport verify_theorem_a(int max_order, const SweepOptions& options) {
  return run_brace_sweep(
      "theorem-a", max_order, options, z_group_population(max_order, options),
      [](const SkewBrace& brace) {
        std::vector<std::string> reasons;
        const FiniteGroup mult = brace.multiplicative_group();
        if (!is_solvable(mult)) {
          reasons.push_back("multiplicative group is not solvable");
        }
        if (!is_almost_sylow_cyclic(mult)) {
          reasons.push_back("multiplicative group is not almost Sylow cyclic");
        }
        return reasons;
      });
}

SweepReport verify_theorem_b(int max_order, const SweepOptions& options) {
  return run_brace_sweep(
      "theorem-b", max_order, options, z_group_population(max_order, options),
      [](const SkewBrace& brace) {
        std::vector<std::string> reasons;
        const auto chain = supersolvable_chain(brace);
        if (!chain) {
          reasons.push_back("no ideal chain with prime factors exists");
        } else if (!verify_ideal_chain(brace, *chain)) {
          reasons.push_back("constructed ideal chain fails verification");
        }
        if (!has_normal_p_complement(brace.multiplicative_group(), 2)) {
          reasons.push_back("multiplicative group has no normal 2-complement");
        }
        return reasons;
      });
}

SweepReport verify_theorem_c(int max_order, const SweepOptions& options) {
  return run_brace_sweep(
      "theorem-c", max_order, options, odd_order_population(max_order, options),
      [](const SkewBrace& brace) {
        std::vector<std::string> reasons;
        if (is_z_group(brace.additive_group()) !=
            is_z_group(brace.multiplicative_group())) {
          reasons.push_back(
              "additive and multiplicative groups disagree on all Sylow subgroups "
              "being cyclic");
        }
        return reasons;
      });
}

bool check_sylow_transitivity_lemma(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_table(g)) {
    throw ContractViolation("subgroup does not belong to the given group");
  }
  const int index = s.index();
  const std::vector<int> primes = prime_divisors(index);
  if (index < 2 || primes.size() != 1) {
    throw ContractViolation("subgroup index must be a prime power greater than 1");
  }
  const int q = primes.front();
  // left cosets keyed by least member
  const int n = g.order();
  std::vector<int> coset_rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int h : s.elements()) rep = std::min(rep, g.op(x, h));
    coset_rep[x] = rep;
  }
  const Subgroup syl = sylow(g, q);
  std::vector<char> reached(n, 0);
  std::vector<int> stack{coset_rep[0]};
  reached[coset_rep[0]] = 1;
  while (!stack.empty()) {
    const int rep = stack.back();
    stack.pop_back();
    for (int y : syl.elements()) {
      const int moved = coset_rep[g.op(y, rep)];
      if (!reached[moved]) {
        reached[moved] = 1;
        stack.push_back(moved);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (coset_rep[x] == x && !reached[x]) return false;
  }
  return true;
}

bool check_fitting_lemma(const FiniteGroup& g) {
  if (!is_solvable(g)) {
    throw ContractViolation("the statement assumes a solvable group");
  }
  const Subgroup fit = fitting(g);
  if (!is_cyclic(fit.to_group())) return true;  // hypothesis empty
  const Subgroup der = derived_subgroup(g);
  for (int x : der.elements()) {
    if (!fit.contains(x)) return false;
  }
  return true;
}

std::vector<FiniteGroup> lemma_catalog(int max_order) {
  std::vector<FiniteGroup> raw;
  for (int order = 1; order <= max_order; ++order) {
    for (FiniteGroup& g : catalog::enumerate_z_groups(order)) {
      raw.push_back(std::move(g));
    }
    if (order % 2 == 1 && order <= 63) {
      for (FiniteGroup& g : catalog::groups_of_odd_order(order)) {
        raw.push_back(std::move(g));
      }
    }
    if (order >= 4 && order % 2 == 0) raw.push_back(catalog::dihedral(order));
  }
  const auto add_if_fits = [&](FiniteGroup g) {
    if (g.order() <= max_order) raw.push_back(std::move(g));
  };
  add_if_fits(catalog::quaternion8());
  add_if_fits(catalog::alternating4());
  add_if_fits(catalog::symmetric(4));
  add_if_fits(catalog::direct_product(catalog::cyclic(2), catalog::cyclic(4)));
  add_if_fits(catalog::direct_product(
      catalog::direct_product(catalog::cyclic(2), catalog::cyclic(2)),
      catalog::cyclic(2)));
  add_if_fits(catalog::direct_product(catalog::cyclic(2), catalog::cyclic(12)));
  add_if_fits(catalog::direct_product(catalog::quaternion8(), catalog::cyclic(3)));
  // one representative per isomorphism class, grouped by order
  std::vector<FiniteGroup> out;
  for (int order = 1; order <= max_order; ++order) {
    std::vector<FiniteGroup> same_order;
    for (const FiniteGroup& g : raw) {
      if (g.order() == order) same_order.push_back(g);
    }
    std::vector<FiniteGroup> reps;
    for (FiniteGroup& g : same_order) {
      bool known = false;
      for (const FiniteGroup& rep : reps) {
        if (is_isomorphic(rep, g)) {
          known = true;
          break;
        }
      }
      if (!known) reps.push_back(std::move(g));
    }
    for (FiniteGroup& rep : reps) out.push_back(std::move(rep));
  }
  return out;
}

namespace {

template <typename CaseRunner>
SweepReport run_pair_sweep(const std::string& statement, int max_order,
                           const SweepOptions& options, CaseRunner&& runner) {
  const auto started = std::chrono::steady_clock::now();
  SweepReport report;
  report.statement = statement;
  report.case_label = "pairs";
  report.max_order = max_order;
  report.excluded_orders = options.exclude_orders;

  std::vector<FiniteGroup> population;
  for (FiniteGroup& g : lemma_catalog(max_order)) {
    if (!order_excluded(options, g.order())) population.push_back(std::move(g));
  }
  const auto outcomes = parallel_map<GroupOutcome>(
      population.size(), options.workers, [&](std::size_t i) {
        const FiniteGroup& g = population[i];
        const auto group_started = std::chrono::steady_clock::now();
        GroupOutcome outcome;
        outcome.order = g.order();
        outcome.group = g.name();
        runner(g, outcome);
        outcome.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - group_started)
                .count();
        return outcome;
      });
  for (int order = 1; order <= max_order; ++order) {
    OrderTally tally;
    tally.order = order;
    bool present = false;
    for (const auto& outcome : outcomes) {
      if (outcome.order != order) continue;
      present = true;
      ++tally.groups;
      tally.cases += outcome.cases;
      tally.seconds += outcome.seconds;
      tally.violations += static_cast<long long>(outcome.witnesses.size());
    }
    if (present) report.per_order.push_back(tally);
  }
  for (const auto& outcome : outcomes) {
    for (const auto& witness : outcome.witnesses) report.witnesses.push_back(witness);
  }
  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string join_elements(const std::vector<int>& elements) {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements[i]);
  }
  return out + "]";
}

}  // namespace

SweepReport sweep_sylow_transitivity(int max_order, const SweepOptions& options) {
  return run_pair_sweep(
      "sylow-transitivity", max_order, options,
      [](const FiniteGroup& g, GroupOutcome& outcome) {
        for (const auto& elements : subgroup_lattice(g)) {
          const int index = g.order() / static_cast<int>(elements.size());
          if (index < 2 || prime_divisors(index).size() != 1) continue;
          const Subgroup s(g, elements);
          ++outcome.cases;
          if (!check_sylow_transitivity_lemma(g, s)) {
            outcome.witnesses.push_back(WitnessRecord{
                g.order(), g.name(),
                "Sylow subgroup fails to act transitively on cosets of " +
                    join_elements(elements),
                ""});
          }
        }
      });
}

SweepReport sweep_fitting_commutator(int max_order, const SweepOptions& options) {
  return run_pair_sweep("fitting-commutator", max_order, options,
                        [](const FiniteGroup& g, GroupOutcome& outcome) {
                          if (!is_solvable(g)) return;
                          ++outcome.cases;
                          if (!check_fitting_lemma(g)) {
                            outcome.witnesses.push_back(WitnessRecord{
                                g.order(), g.name(),
                                "derived subgroup escapes a cyclic Fitting subgroup",
                                ""});
                          }
                        });
}

std::vector<SkewBrace> build_example_braces() {
  std::vector<SkewBrace> out;
  // Additive A4 with abelian multiplicative group: factor A4 as the product
  // of its Sylow 2-subgroup and a subgroup of order 3.
  const FiniteGroup a4 = catalog::alternating4();
  const Subgroup v4 = sylow(a4, 2);
  int three = -1;
  for (int x = 0; x < a4.order(); ++x) {
    if (a4.element_order(x) == 3) {
      three = x;
      break;
    }
  }
  const Subgroup c3 = closure(a4, {three});
  out.push_back(from_exact_factorization(a4, v4, c3)
                    .renamed("A4-V4-C3",
                             "exact factorization of A4 by its Sylow 2-subgroup "
                             "and a subgroup of order 3"));
  // Additive D8 with cyclic multiplicative group of order 8.
  const FiniteGroup d8 = catalog::dihedral(8);
  for (const LambdaTable& table : enumerate_regular_subgroups(d8)) {
    const SkewBrace brace = from_regular_subgroup(table, "D8-C8");
    if (is_cyclic(brace.multiplicative_group())) {
      out.push_back(brace);
      break;
    }
  }
  if (out.size() != 2) {
    throw InternalError("no cyclic multiplicative structure found over D8");
  }
  return out;
}

}  // namespace skewlab
