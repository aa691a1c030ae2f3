#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reslab/adversaries.hpp"
#include "reslab/coloring.hpp"
#include "reslab/engine.hpp"
#include "reslab/generators.hpp"
#include "reslab/hamilton.hpp"
#include "reslab/matching.hpp"
#include "reslab/records.hpp"
#include "reslab/spectral.hpp"

namespace py = pybind11;
using namespace reslab;

namespace {

ExperimentConfig make_config(const std::string& property, const std::string& model, int n, double p, int d,
                             const std::string& strategy, const std::string& mode, std::vector<double> budgets,
                             bool fractions, int trials, std::uint64_t seed, double epsilon, int threads) {
  ExperimentConfig c;
  c.property = parse_property(property);
  c.source = GraphSource{model, n, p, d};
  c.adversary = AdversarySpec{strategy, parse_move_mode(mode)};
  c.budgets = std::move(budgets);
  c.unit = fractions ? BudgetUnit::fraction_of_np : BudgetUnit::absolute;
  c.trials = trials;
  c.seed = Seed{seed};
  c.chromatic_epsilon = epsilon;
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_reslab, m) {
  m.doc() = "Local resilience experiments on random graphs";
  m.attr("__version__") = version();

  py::register_exception<Error>(m, "ReslabError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges", [](int n, const std::vector<Edge>& e) { return Graph::from_edges(n, e); },
                  py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        degree(g, v);  // range check
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("degree", [](const Graph& g, Vertex v) { return degree(g, v); })
      .def("max_degree", [](const Graph& g) { return max_degree(g); })
      .def("min_degree", [](const Graph& g) { return min_degree(g); })
      .def("to_edge_list", [](const Graph& g) { return serialize_edge_list(g); })
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("gnp", [](int n, double p, std::uint64_t seed) { return gnp(n, p, Seed{seed}); }, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("random_regular", [](int n, int d, std::uint64_t seed) { return random_regular(n, d, Seed{seed}); },
        py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("petersen_graph", &petersen_graph);
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);

  m.def("max_matching", [](const Graph& g) { return max_matching(g).pairs; });
  m.def("has_perfect_matching", &has_perfect_matching);
  m.def(
      "posa_find_hamilton",
      [](const Graph& g, std::uint64_t seed, int restart_budget) {
        PosaOptions o;
        o.restart_budget = restart_budget;
        return posa_find_hamilton(g, Seed{seed}, o);
      },
      py::arg("g"), py::arg("seed"), py::arg("restart_budget") = 20);
  m.def("exact_hamilton", &exact_hamilton);
  m.def("verify_hamilton_cycle", &verify_hamilton_cycle);
  m.def("dsatur", [](const Graph& g) { return dsatur(g).colors; });
  m.def("exact_chromatic", &exact_chromatic);
  m.def("degeneracy", [](const Graph& g) { return degeneracy(g).d; });
  m.def("k0", &k0, py::arg("n"), py::arg("p"));
  m.def("spectrum", [](const Graph& g) { return spectral::adjacency_spectrum(g).eigenvalues; });
  m.def("lambda_", [](const Graph& g) { return spectral::adjacency_spectrum(g).lambda; });

  m.def(
      "attack",
      [](const Graph& g, const std::string& strategy, int budget, std::uint64_t seed, const std::string& mode) {
        AdversaryMove move = plan_move(AdversarySpec{strategy, parse_move_mode(mode)}, g, budget, Seed{seed});
        return py::make_tuple(move.h, to_string(move.mode), max_degree(move.h));
      },
      py::arg("g"), py::arg("strategy"), py::arg("budget"), py::arg("seed"), py::arg("mode") = "delete",
      "Returns (H, mode, max degree of H) for the strategy's move against g.");

  m.def(
      "_sweep_json",
      [](const std::string& property, const std::string& model, int n, double p, int d, const std::string& strategy,
         const std::string& mode, std::vector<double> budgets, bool fractions, int trials, std::uint64_t seed,
         double epsilon, int threads) {
        ExperimentConfig c = make_config(property, model, n, p, d, strategy, mode, std::move(budgets), fractions,
                                         trials, seed, epsilon, threads);
        ResilienceCurve curve;
        {
          py::gil_scoped_release release;
          curve = sweep(c);
        }
        return summary(c, curve).dump();
      });

  m.def("_validate_json", [](const std::string& lemma, int n, double p, int trials, std::uint64_t seed, int samples,
                             int threads) {
    LemmaOptions o;
    o.samples = samples;
    o.threads = threads;
    LemmaReport r;
    {
      py::gil_scoped_release release;
      r = validate_lemma(lemma, n, p, trials, Seed{seed}, o);
    }
    return to_json(r).dump();
  });
}
