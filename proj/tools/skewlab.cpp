#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewlab/brace.hpp"
#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/group.hpp"
#include "skewlab/holomorph.hpp"
#include "skewlab/io.hpp"
#include "skewlab/theorems.hpp"

namespace {

using namespace skewlab;
using namespace skewlab::catalog;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return 0;
    case Verdict::violated:
      return 1;
    case Verdict::partial:
      return 3;
  }
  return 70;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << text;
}

// A group argument is a file when it names one on disk or looks like a path;
// everything else goes through the catalog name grammar.
FiniteGroup resolve_group(const std::string& spec) {
  const bool pathish = spec.find('/') != std::string::npos ||
                       spec.find('.') != std::string::npos;
  if (pathish || std::filesystem::exists(spec)) {
    return io::parse_group(read_file(spec));
  }
  return group_by_name(spec);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string lam_string(const std::vector<int>& lam) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ' ';
    os << lam[i];
  }
  os << ']';
  return os.str();
}

int run_enumerate(const std::string& group_spec, const std::string& out_path,
                  int workers, const EngineBudget& budget) {
  const FiniteGroup base = resolve_group(group_spec);
  const HolomorphGroup hol = holomorph(base, budget);
  const auto tables = enumerate_regular_subgroups(hol, budget, workers);
  const auto classes = dedupe_by_aut_conjugacy(tables);

  std::cout << "additive group " << base.name() << ", order " << base.order()
            << "\n";
  std::cout << "holomorph order " << hol.size() << "\n";
  std::cout << "braces: " << tables.size() << "\n";
  std::cout << "aut-classes: " << classes.size() << "\n";
  std::ostringstream docs;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const SkewBrace brace = from_regular_subgroup(
        tables[i], base.name() + "#" + std::to_string(i));
    const auto chain = supersolvable_chain(brace);
    std::cout << "#" << i << "  lam=" << lam_string(tables[i].lam())
              << "  socle=" << socle(brace).size()
              << "  z-group(+)=" << yn(is_z_group(brace.additive_group()))
              << "  z-group(*)=" << yn(is_z_group(brace.multiplicative_group()))
              << "  cyclic(*)=" << yn(is_cyclic(brace.multiplicative_group()))
              << "  supersolvable=" << yn(chain.has_value()) << "\n";
    if (!out_path.empty()) docs << io::serialize_brace(brace) << "\n";
  }
  if (!out_path.empty()) emit(out_path, docs.str());
  return 0;
}

int run_verify(const std::string& statement, int max_order,
               const std::vector<int>& exclude, int workers,
               const std::string& out_path, bool timings,
               const EngineBudget& budget) {
  SweepOptions options;
  options.workers = workers;
  options.budget = budget;
  options.exclude_orders = exclude;
  SweepReport report;
  if (statement == "theorem-a") {
    report = verify_theorem_a(max_order, options);
  } else if (statement == "theorem-b") {
    report = verify_theorem_b(max_order, options);
  } else if (statement == "theorem-c") {
    report = verify_theorem_c(max_order, options);
  } else {
    throw InputError("unknown statement: " + statement);
  }
  std::cout << io::report_to_human(report, timings);
  if (!out_path.empty()) emit(out_path, io::serialize_report(report));
  return exit_for(report.verdict());
}

int run_examples() {
  const auto braces = build_example_braces();
  bool all_ok = true;
  for (const SkewBrace& brace : braces) {
    const FiniteGroup& add = brace.additive_group();
    const FiniteGroup& mult = brace.multiplicative_group();
    std::cout << "example " << brace.name() << " (order " << brace.order()
              << ")\n";
    std::cout << "  provenance: " << brace.provenance() << "\n";
    std::vector<std::pair<std::string, bool>> rows;
    if (brace.name() == "A4-V4-C3") {
      const FiniteGroup target =
          direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(3));
      rows = {
          {"additive group isomorphic to A4", is_isomorphic(add, alternating4())},
          {"multiplicative group isomorphic to C2xC2xC3",
           is_isomorphic(mult, target)},
          {"multiplicative group almost Sylow cyclic",
           is_almost_sylow_cyclic(mult)},
          {"multiplicative group solvable", is_solvable(mult)},
          {"additive group not a Z-group", !is_z_group(add)},
      };
    } else if (brace.name() == "D8-C8") {
      rows = {
          {"additive group isomorphic to D8", is_isomorphic(add, dihedral(8))},
          {"multiplicative group isomorphic to C8",
           is_isomorphic(mult, cyclic(8))},
          {"multiplicative group a Z-group", is_z_group(mult)},
          {"additive group not a Z-group", !is_z_group(add)},
      };
    } else {
      rows = {{"recognized example name", false}};
    }
    for (const auto& [label, ok] : rows) {
      std::cout << "  " << label << ": " << yn(ok) << "\n";
      if (!ok) all_ok = false;
    }
    // informational, not part of the pass/fail gate
    std::cout << "  supersolvable ideal chain exists: "
              << yn(supersolvable_chain(brace).has_value()) << "\n\n";
  }
  std::cout << (all_ok ? "all example checks passed" : "example checks FAILED")
            << "\n";
  return all_ok ? 0 : 1;
}

int run_lemmas(int max_order, const std::string& statement, int workers,
               const std::string& out_path, bool timings,
               const EngineBudget& budget) {
  SweepOptions options;
  options.workers = workers;
  options.budget = budget;
  std::vector<SweepReport> reports;
  if (statement.empty() || statement == "sylow-transitivity") {
    reports.push_back(sweep_sylow_transitivity(max_order, options));
  }
  if (statement.empty() || statement == "fitting-commutator") {
    reports.push_back(sweep_fitting_commutator(max_order, options));
  }
  if (!out_path.empty() && reports.size() != 1) {
    throw InputError("--out requires --statement to pick a single sweep");
  }
  int worst = 0;
  for (const auto& report : reports) {
    std::cout << io::report_to_human(report, timings);
    const int code = exit_for(report.verdict());
    if (code == 1 || (code == 3 && worst == 0)) worst = code == 1 ? 1 : 3;
    if (!out_path.empty()) emit(out_path, io::serialize_report(report));
  }
  return worst;
}

int run_export(const std::string& in_path, const std::string& format,
               const std::string& out_path, bool timings) {
  const SweepReport report = io::parse_report(read_file(in_path));
  if (format == "csv") {
    emit(out_path, io::report_to_csv(report));
  } else if (format == "human") {
    emit(out_path, io::report_to_human(report, timings));
  } else if (format == "json") {
    emit(out_path, io::serialize_report(report));
  } else {
    throw InputError("unknown format: " + format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "skewlab: skew braces as regular subgroups of holomorphs, with sweeps "
      "over Z-group and odd-order additive groups"};
  app.require_subcommand(1);

  EngineBudget budget = EngineBudget::from_env();
  app.add_option("--max-holomorph-elements", budget.max_holomorph_elements,
                 "Cap on materialized holomorph size");
  app.add_option("--max-search-nodes", budget.max_search_nodes,
                 "Cap on backtracking nodes per enumeration");
  app.add_option("--max-seconds", budget.max_seconds,
                 "Wall-clock cap per enumeration, 0 disables");

  std::string group_spec;
  std::string out_path;
  int workers = 1;
  bool timings = false;

  auto* enumerate = app.add_subcommand(
      "enumerate", "List all skew braces on a given additive group");
  enumerate->add_option("--additive", group_spec,
                        "Catalog name (C4, D8, Q8, S4, C2xC4, ...) "
                        "or path to a group document")
      ->required();
  enumerate->add_option("--out", out_path,
                        "Write the braces as concatenated brace documents");
  enumerate->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string statement;
  int max_order = 0;
  std::vector<int> exclude;

  auto* verify = app.add_subcommand(
      "verify", "Sweep a statement over all braces up to an order bound");
  verify->add_option("statement", statement, "theorem-a | theorem-b | theorem-c")
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "theorem-c"}));
  verify->add_option("--max-order", max_order, "Largest additive order swept")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--exclude-order", exclude,
                     "Drop an order from the sweep (repeatable)");
  verify->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Write the canonical report document");
  verify->add_flag("--timings", timings,
                   "Show wall-clock columns (non-deterministic output)");

  std::string lemma_statement;
  auto* lemmas = app.add_subcommand(
      "lemmas", "Sweep the supporting group-theory lemmas over the catalog");
  lemmas->add_option("--max-order", max_order, "Largest group order swept")
      ->required()
      ->check(CLI::PositiveNumber);
  lemmas->add_option("--statement", lemma_statement,
                     "sylow-transitivity | fitting-commutator (default both)")
      ->check(CLI::IsMember({"sylow-transitivity", "fitting-commutator"}));
  lemmas->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  lemmas->add_option("--out", out_path, "Write the canonical report document");
  lemmas->add_flag("--timings", timings,
                   "Show wall-clock columns (non-deterministic output)");

  auto* examples = app.add_subcommand(
      "examples", "Build both counterexample braces and print their checks");
  (void)examples;

  std::string in_path;
  std::string format = "json";
  auto* exporter =
      app.add_subcommand("export", "Re-render a report document");
  exporter->add_option("--in", in_path, "Report document to read")->required();
  exporter->add_option("--format", format, "csv | human | json")
      ->check(CLI::IsMember({"csv", "human", "json"}));
  exporter->add_option("--out", out_path, "Output path (default stdout)");
  exporter->add_flag("--timings", timings,
                     "Show wall-clock columns in human format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      return run_enumerate(group_spec, out_path, workers, budget);
    }
    if (verify->parsed()) {
      return run_verify(statement, max_order, exclude, workers, out_path,
                        timings, budget);
    }
    if (lemmas->parsed()) {
      return run_lemmas(max_order, lemma_statement, workers, out_path, timings,
                        budget);
    }
    if (examples->parsed()) {
      return run_examples();
    }
    if (exporter->parsed()) {
      return run_export(in_path, format, out_path, timings);
    }
    std::cerr << "error: no subcommand given\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
