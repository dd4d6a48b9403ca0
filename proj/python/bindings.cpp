#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "skewlab/brace.hpp"
#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/group.hpp"
#include "skewlab/holomorph.hpp"
#include "skewlab/io.hpp"
#include "skewlab/theorems.hpp"

namespace py = pybind11;
using namespace skewlab;

namespace {

SweepOptions make_options(int workers, const std::vector<int>& exclude_orders) {
  SweepOptions options;
  options.workers = workers;
  options.exclude_orders = exclude_orders;
  options.budget = EngineBudget::from_env();
  return options;
}

std::vector<SkewBrace> braces_of(const FiniteGroup& base, bool dedupe, int workers) {
  auto tables = enumerate_regular_subgroups(base, EngineBudget::from_env(), workers);
  if (dedupe) tables = dedupe_by_aut_conjugacy(tables);
  std::vector<SkewBrace> braces;
  braces.reserve(tables.size());
  for (const auto& table : tables) braces.push_back(from_regular_subgroup(table));
  return braces;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "skew brace computation engine";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def(py::init<const std::vector<std::vector<int>>&, std::string>(),
           py::arg("table"), py::arg("name") = "")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name",
                             [](const FiniteGroup& g) { return g.name(); })
      .def("op", &FiniteGroup::op)
      .def("inverse", &FiniteGroup::inverse)
      .def("element_order", &FiniteGroup::element_order)
      .def("power", &FiniteGroup::power)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("order_profile", &FiniteGroup::order_profile)
      .def("conjugacy_class_sizes", &FiniteGroup::conjugacy_class_sizes)
      .def("same_table", &FiniteGroup::same_table)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + (g.name().empty() ? "?" : g.name()) +
               " of order " + std::to_string(g.order()) + ">";
      });

  py::class_<SkewBrace>(m, "SkewBrace")
      .def_property_readonly("order", &SkewBrace::order)
      .def_property_readonly("name",
                             [](const SkewBrace& b) { return b.name(); })
      .def_property_readonly("provenance",
                             [](const SkewBrace& b) { return b.provenance(); })
      .def("add", &SkewBrace::add)
      .def("neg", &SkewBrace::neg)
      .def("mul", &SkewBrace::mul)
      .def("mul_inverse", &SkewBrace::mul_inverse)
      .def("lam", &SkewBrace::lambda, py::arg("a"), py::arg("b"))
      .def("lambda_perm",
           [](const SkewBrace& b, int a) { return b.lambda_perm(a); })
      .def("additive_group", &SkewBrace::additive_group)
      .def("multiplicative_group", &SkewBrace::multiplicative_group)
      .def("__repr__", [](const SkewBrace& b) {
        return "<SkewBrace " + (b.name().empty() ? "?" : b.name()) +
               " of order " + std::to_string(b.order()) + ">";
      });

  // catalog
  m.def("cyclic", &catalog::cyclic, py::arg("n"));
  m.def("dihedral", &catalog::dihedral, py::arg("order"));
  m.def("quaternion8", &catalog::quaternion8);
  m.def("alternating4", &catalog::alternating4);
  m.def("symmetric", &catalog::symmetric, py::arg("n"));
  m.def("direct_product", &catalog::direct_product);
  m.def("group_by_name", &catalog::group_by_name, py::arg("name"));
  m.def("enumerate_z_groups", &catalog::enumerate_z_groups, py::arg("order"));
  m.def("groups_of_odd_order", &catalog::groups_of_odd_order, py::arg("n"));

  // predicates
  m.def("is_solvable", &is_solvable);
  m.def("is_cyclic", &is_cyclic);
  m.def("is_z_group", &is_z_group);
  m.def("is_almost_sylow_cyclic", &is_almost_sylow_cyclic);
  m.def("is_supersolvable_group", &is_supersolvable_group);
  m.def("is_nilpotent", &is_nilpotent);
  m.def("is_isomorphic", &is_isomorphic,
        py::call_guard<py::gil_scoped_release>());

  // braces
  m.def("enumerate_braces", &braces_of, py::arg("base"),
        py::arg("dedupe") = false, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("trivial_brace", &SkewBrace::trivial, py::arg("group"));
  m.def("build_example_braces", &build_example_braces,
        py::call_guard<py::gil_scoped_release>());
  m.def("socle", &socle, py::arg("brace"));
  m.def("is_subbrace", &is_subbrace, py::arg("brace"), py::arg("subset"));
  m.def("is_ideal", &is_ideal, py::arg("brace"), py::arg("subset"));
  m.def(
      "supersolvable_chain",
      [](const SkewBrace& b) -> py::object {
        const auto chain = supersolvable_chain(b);
        if (!chain) return py::none();
        return py::make_tuple(chain->levels, chain->factor_orders);
      },
      py::arg("brace"),
      "Levels and prime factor orders of an ascending ideal chain, or None.");

  // sweeps, returned as the canonical report document
  m.def(
      "verify_theorem_a",
      [](int max_order, int workers, const std::vector<int>& exclude_orders) {
        return io::serialize_report(
            verify_theorem_a(max_order, make_options(workers, exclude_orders)));
      },
      py::arg("max_order"), py::arg("workers") = 1,
      py::arg("exclude_orders") = std::vector<int>{},
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_theorem_b",
      [](int max_order, int workers, const std::vector<int>& exclude_orders) {
        return io::serialize_report(
            verify_theorem_b(max_order, make_options(workers, exclude_orders)));
      },
      py::arg("max_order"), py::arg("workers") = 1,
      py::arg("exclude_orders") = std::vector<int>{},
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_theorem_c",
      [](int max_order, int workers, const std::vector<int>& exclude_orders) {
        return io::serialize_report(
            verify_theorem_c(max_order, make_options(workers, exclude_orders)));
      },
      py::arg("max_order"), py::arg("workers") = 1,
      py::arg("exclude_orders") = std::vector<int>{},
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_sylow_transitivity",
      [](int max_order) {
        return io::serialize_report(sweep_sylow_transitivity(max_order));
      },
      py::arg("max_order"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_fitting_commutator",
      [](int max_order) {
        return io::serialize_report(sweep_fitting_commutator(max_order));
      },
      py::arg("max_order"), py::call_guard<py::gil_scoped_release>());

  // documents
  m.def("serialize_group", &io::serialize_group);
  m.def("parse_group", &io::parse_group);
  m.def("serialize_brace", &io::serialize_brace);
  m.def("parse_brace", &io::parse_brace);
  m.def(
      "report_to_csv",
      [](const std::string& document) {
        return io::report_to_csv(io::parse_report(document));
      },
      py::arg("document"));
  m.def(
      "report_to_human",
      [](const std::string& document) {
        return io::report_to_human(io::parse_report(document));
      },
      py::arg("document"));
}
