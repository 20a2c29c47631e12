#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "randic/bounds.hpp"
#include "randic/conjectures.hpp"
#include "randic/enumeration.hpp"
#include "randic/graph.hpp"
#include "randic/graph6.hpp"
#include "randic/search.hpp"
#include "randic/survey.hpp"

namespace py = pybind11;
using namespace randic;

namespace {

py::dict report_dict(const InvariantReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["min_degree"] = r.min_degree;
  d["degree_sequence"] = r.degree_sequence;
  d["randic"] = r.randic;
  d["diameter"] = r.diameter ? py::cast(*r.diameter) : py::none();
  d["avg_distance"] = r.avg_distance ? py::cast(*r.avg_distance) : py::none();
  d["is_connected"] = r.is_connected;
  return d;
}

ClaimId claim_from(const std::string& s) { return parse_claim(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Randić index, distance invariants and conjecture verification";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("min_degree", &Graph::min_degree)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("edges", &Graph::edges)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("toggle_edge", &Graph::toggle_edge)
      .def("relabeled", [](const Graph& g, const std::vector<int>& perm) { return g.relabeled(perm); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);

  m.def("is_connected", &is_connected);
  m.def("all_pairs_distances", [](const Graph& g) {
    DistanceMatrix d = all_pairs_distances(g);
    std::vector<std::vector<int>> out(g.order(), std::vector<int>(g.order()));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) out[u][v] = d(u, v);
    return out;
  });
  m.def("diameter", &diameter);
  m.def("average_distance", &average_distance);
  m.def("randic_index", &randic_index);
  m.def("invariant_report", [](const Graph& g) { return report_dict(invariant_report(g)); });

  m.def("parse_graph6", &parse_graph6);
  m.def("parse_sparse6", &parse_sparse6);
  m.def("parse_graph_line", &parse_graph_line);
  m.def("serialize_graph6", &serialize_graph6);

  py::class_<ConjectureVerdict>(m, "ConjectureVerdict")
      .def_property_readonly("claim", [](const ConjectureVerdict& v) { return std::string(claim_name(v.claim)); })
      .def_readonly("holds", &ConjectureVerdict::holds)
      .def_readonly("slack", &ConjectureVerdict::slack)
      .def_readonly("is_equality", &ConjectureVerdict::is_equality)
      .def_readonly("tolerance", &ConjectureVerdict::tolerance)
      .def_readonly("structural_mismatch", &ConjectureVerdict::structural_mismatch);

  m.def("check_c1_additive", &check_c1_additive, py::arg("g"), py::arg("tol") = kDefaultTolerance);
  m.def("check_c1_ratio", &check_c1_ratio, py::arg("g"), py::arg("tol") = kDefaultTolerance);
  m.def("check_c2", &check_c2, py::arg("g"), py::arg("tol") = kDefaultTolerance);
  m.def("is_path", &is_path);
  m.def("premises", [](const Graph& g) {
    PremiseProfile p = premises(g);
    py::dict d;
    d["n"] = p.n;
    d["delta"] = p.delta;
    d["part1"] = p.part1;
    d["part2"] = p.part2;
    d["part3"] = p.part3;
    return d;
  });

  m.def("canonical_key", [](const Graph& g) {
    CanonicalKey k = canonical_key(g);
    return py::make_tuple(k.n, k.bits);
  });
  m.def(
      "enumerate_graphs",
      [](int n, std::optional<int> min_degree, bool connected_only) {
        return enumerate_graphs({n, min_degree, connected_only});
      },
      py::arg("n"), py::arg("min_degree") = py::none(), py::arg("connected_only") = true);
  m.def("sample_min_degree",
        [](int n, int delta, std::uint64_t seed) { return sample_min_degree(n, delta, seed); }, py::arg("n"),
        py::arg("delta"), py::arg("seed"));

  py::class_<SearchState>(m, "SearchResult")
      .def_readonly("best", &SearchState::best)
      .def_readonly("best_slack", &SearchState::best_slack)
      .def_readonly("steps", &SearchState::step)
      .def_readonly("restarts", &SearchState::restarts)
      .def_property_readonly("slack_trace", [](const SearchState& s) {
        std::vector<double> out;
        for (const auto& t : s.trace) out.push_back(t.slack);
        return out;
      });
  m.def(
      "hunt",
      [](int n, int delta, const std::string& claim, int budget, std::uint64_t seed) {
        return hunt(n, delta, claim_from(claim), budget, seed);
      },
      py::arg("n"), py::arg("delta"), py::arg("claim"), py::arg("budget"), py::arg("seed"));

  m.def(
      "survey",
      [](int n_max, double tol) {
        SurveyResult s = run_survey(n_max, tol);
        py::dict out;
        for (const auto& f : s.families) {
          py::dict d;
          d["cells"] = f.cells;
          d["claim_cells"] = f.claim_cells;
          d["violations"] = f.violations;
          d["boundary"] = f.boundary;
          d["min_value"] = f.minimum ? py::cast(f.minimum->value) : py::none();
          out[py::str(f.name)] = d;
        }
        return out;
      },
      py::arg("n_max") = kDefaultSurveyMaxOrder, py::arg("tol") = kDefaultTolerance);

  auto b = m.def_submodule("bounds", "Closed-form bound functions of (n, k)");
  b.def("erdos_diameter_bound", &bounds::erdos_diameter_bound);
  b.def("kouider_winkler_bound", &bounds::kouider_winkler_bound);
  b.def("lemma2_p", [](int n, int k) {
    auto c = bounds::lemma2_p(n, k);
    return py::make_tuple(c.candidates, c.rule_id);
  });
  b.def("randic_lower_bound", &bounds::randic_lower_bound);
  b.def("g_fn", &bounds::g_fn);
  b.def("f_additive", &bounds::f_additive);
  b.def("f_ratio", &bounds::f_ratio);
  b.def("q_fn", &bounds::q_fn, py::arg("n"), py::arg("p"), py::arg("k"));
  b.def("conjecture1_additive_rhs", &bounds::conjecture1_additive_rhs);
  b.def("conjecture1_ratio_rhs", &bounds::conjecture1_ratio_rhs);
  b.def("part3_formula_gap", &bounds::part3_formula_gap);
}
