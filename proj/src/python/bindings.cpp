#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsgp/gas.hpp"
#include "nsgp/harness.hpp"
#include "nsgp/invariants.hpp"

namespace py = pybind11;

using nsgp::Factorization;
using nsgp::GasParams;
using nsgp::Int;
using nsgp::NumericalMonoid;

namespace {

Factorization as_factorization(const std::vector<Int>& e) { return Factorization{e}; }

std::vector<std::vector<Int>> plain(const std::vector<Factorization>& zs) {
  std::vector<std::vector<Int>> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(z.e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact non-unique-factorization invariants of numerical monoids";

  py::register_exception<nsgp::Error>(m, "NsgpError", PyExc_ValueError);

  py::class_<NumericalMonoid>(m, "NumericalMonoid")
      .def(py::init<std::vector<Int>>(), py::arg("generators"))
      .def_property_readonly("generators", &NumericalMonoid::generators)
      .def_property_readonly("embedding_dimension", &NumericalMonoid::embedding_dimension)
      .def_property_readonly("is_all_naturals", &NumericalMonoid::is_all_of_n)
      .def("contains", &NumericalMonoid::contains, py::arg("n"))
      .def("leq", &NumericalMonoid::leq, py::arg("a"), py::arg("b"))
      .def("apery", &NumericalMonoid::apery, py::arg("m"))
      .def("frobenius", &NumericalMonoid::frobenius)
      .def("__contains__", &NumericalMonoid::contains)
      .def("__repr__", [](const NumericalMonoid& S) {
        std::string r = "NumericalMonoid([";
        const auto& g = S.generators();
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (i) r += ", ";
          r += std::to_string(g[i]);
        }
        return r + "])";
      });

  m.def(
      "factorizations",
      [](const NumericalMonoid& S, Int n) { return plain(factorizations(S, n)); },
      py::arg("S"), py::arg("n"));
  m.def("factorization_count", &nsgp::factorization_count, py::arg("S"), py::arg("n"));
  m.def(
      "length_set",
      [](const NumericalMonoid& S, Int n) { return nsgp::length_set(S, n).lengths; },
      py::arg("S"), py::arg("n"));
  m.def("max_length", &nsgp::max_length, py::arg("S"), py::arg("n"));
  m.def("min_length", &nsgp::min_length, py::arg("S"), py::arg("n"));
  m.def("delta_set", &nsgp::delta_set, py::arg("S"), py::arg("n"));
  m.def(
      "elasticity_of_element",
      [](const NumericalMonoid& S, Int n) {
        auto r = nsgp::elasticity_of_element(S, n);
        return std::make_pair(r.num(), r.den());
      },
      py::arg("S"), py::arg("n"), "Exact elasticity as a (numerator, denominator) pair");
  m.def(
      "distance",
      [](const std::vector<Int>& z, const std::vector<Int>& w) {
        return nsgp::distance(as_factorization(z), as_factorization(w));
      },
      py::arg("z"), py::arg("w"));

  m.def(
      "r_classes",
      [](const NumericalMonoid& S, Int n) {
        auto part = nsgp::r_classes(S, n);
        py::dict d;
        std::vector<std::vector<std::vector<Int>>> classes;
        for (const auto& cls : part.classes) classes.push_back(plain(cls));
        d["classes"] = classes;
        d["min_lengths"] = part.class_min_lengths;
        d["mu"] = part.mu();
        return d;
      },
      py::arg("S"), py::arg("n"));
  m.def(
      "element_graph",
      [](const NumericalMonoid& S, Int n) {
        auto g = nsgp::element_graph(S, n);
        py::dict d;
        d["vertices"] = g.vertices;
        d["edges"] = g.edges;
        d["components"] = g.component_count;
        return d;
      },
      py::arg("S"), py::arg("n"));

  m.def("catenary_of_element", &nsgp::catenary_of_element, py::arg("S"), py::arg("n"));
  m.def("tame_of_element", &nsgp::tame_of_element, py::arg("S"), py::arg("n"));
  m.def("tame_of_element_i", &nsgp::tame_of_element_i, py::arg("S"), py::arg("n"),
        py::arg("atom_index"));
  m.def(
      "betti_elements", [](const NumericalMonoid& S) { return nsgp::betti_elements(S); },
      py::arg("S"));
  m.def(
      "catenary_degree", [](const NumericalMonoid& S) { return nsgp::catenary_degree(S); },
      py::arg("S"));
  m.def(
      "tame_degree", [](const NumericalMonoid& S) { return nsgp::tame_degree(S); },
      py::arg("S"));
  m.def(
      "tame_degree_of_atom",
      [](const NumericalMonoid& S, int i) { return nsgp::tame_degree_of_atom(S, i); },
      py::arg("S"), py::arg("atom_index"));
  m.def(
      "omega", [](const NumericalMonoid& S) { return nsgp::omega(S); }, py::arg("S"));
  m.def(
      "omega_of_atom",
      [](const NumericalMonoid& S, Int b) { return nsgp::omega_of_atom(S, b); },
      py::arg("S"), py::arg("atom"));
  m.def(
      "tau_of_atom", [](const NumericalMonoid& S, Int b) { return nsgp::tau_of_atom(S, b); },
      py::arg("S"), py::arg("atom"));
  m.def("min_multiple_in_rest", &nsgp::min_multiple_in_rest, py::arg("S"));

  py::class_<GasParams>(m, "GasParams")
      .def(py::init<Int, Int, Int, Int>(), py::arg("a"), py::arg("h"), py::arg("d"),
           py::arg("x"))
      .def_readonly("a", &GasParams::a)
      .def_readonly("h", &GasParams::h)
      .def_readonly("d", &GasParams::d)
      .def_readonly("x", &GasParams::x)
      .def("generators", &GasParams::generators)
      .def("to_monoid", &GasParams::to_monoid)
      .def("__repr__", [](const GasParams& P) {
        return "GasParams(a=" + std::to_string(P.a) + ", h=" + std::to_string(P.h) +
               ", d=" + std::to_string(P.d) + ", x=" + std::to_string(P.x) + ")";
      });

  m.def(
      "qaid_rep",
      [](const GasParams& P, Int n) {
        auto r = nsgp::qaid_rep(P, n);
        return std::make_pair(r.q, r.i);
      },
      py::arg("P"), py::arg("n"));
  m.def("gas_contains", &nsgp::gas_contains, py::arg("P"), py::arg("n"));
  m.def("gas_contains_general", &nsgp::gas_contains_general, py::arg("P"), py::arg("q"),
        py::arg("i"));
  m.def("gas_apery", &nsgp::gas_apery, py::arg("P"));
  m.def("gas_max_length", &nsgp::gas_max_length, py::arg("P"), py::arg("n"));
  m.def("gas_max_length_general", &nsgp::gas_max_length_general, py::arg("P"), py::arg("q"),
        py::arg("i"));
  m.def("gas_betti_candidates", &nsgp::gas_betti_candidates, py::arg("P"));
  m.def("gas_min_multiple", &nsgp::gas_min_multiple, py::arg("P"));
  m.def("gas_catenary", &nsgp::gas_catenary, py::arg("P"));
  m.def("gas_tame", &nsgp::gas_tame, py::arg("P"));
  m.def("gas_frobenius", &nsgp::gas_frobenius, py::arg("P"));
  m.def(
      "gas_bounds",
      [](const GasParams& P) {
        auto b = nsgp::gas_bounds(P);
        py::dict d;
        d["B"] = std::make_pair(b.upper.num(), b.upper.den());
        d["B_minus_t"] = std::make_pair(b.upper_minus_tame.num(), b.upper_minus_tame.den());
        d["t_minus_c"] = b.tame_minus_catenary;
        return d;
      },
      py::arg("P"), "Bound data with rationals as (numerator, denominator) pairs");
  m.def(
      "gas_h1_check",
      [](const GasParams& P) {
        auto v = nsgp::gas_h1_check(P);
        return std::make_pair(v.catenary, v.tame);
      },
      py::arg("P"));
  m.def(
      "gas_tame_witness",
      [](const GasParams& P) {
        auto w = nsgp::gas_tame_witness(P);
        py::dict d;
        d["element"] = w.element;
        d["far"] = w.far.e;
        d["tame"] = w.tame;
        d["oracle_distance"] = w.oracle_distance;
        return d;
      },
      py::arg("P"));

  m.def(
      "sweep_json",
      [](Int a_lo, Int a_hi, Int h_lo, Int h_hi, Int d_lo, Int d_hi,
         const std::vector<std::string>& checks, int workers, Int budget_ms) {
        nsgp::SweepConfig cfg;
        cfg.a_lo = a_lo;
        cfg.a_hi = a_hi;
        cfg.h_lo = h_lo;
        cfg.h_hi = h_hi;
        cfg.d_lo = d_lo;
        cfg.d_hi = d_hi;
        if (!checks.empty()) {
          cfg.checks.clear();
          for (const auto& name : checks) {
            auto c = nsgp::check_from_name(name);
            if (!c) throw nsgp::ConfigInvalid("unknown check: " + name);
            cfg.checks.push_back(*c);
          }
        }
        cfg.workers = workers;
        cfg.tuple_budget = std::chrono::milliseconds(budget_ms);
        return nsgp::report_json(nsgp::run_sweep(cfg));
      },
      py::arg("a_lo"), py::arg("a_hi"), py::arg("h_lo") = 1, py::arg("h_hi") = 1,
      py::arg("d_lo") = 1, py::arg("d_hi") = 1,
      py::arg("checks") = std::vector<std::string>{}, py::arg("workers") = 1,
      py::arg("budget_ms") = 10000,
      "Run a verification sweep over the (a, h, d) grid with x = 1..a-1; returns the JSON "
      "report");
  m.def("counterexample_ok", [] {
    return nsgp::counterexample_check().status == nsgp::RowStatus::Pass;
  });

  m.attr("__version__") = "0.1.0";
}
