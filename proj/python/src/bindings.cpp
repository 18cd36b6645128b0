#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "forestdist/classical.hpp"
#include "forestdist/family.hpp"
#include "forestdist/forest.hpp"
#include "forestdist/geodetic.hpp"
#include "forestdist/io.hpp"

namespace py = pybind11;
using namespace forestdist;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Logarithmic forest distances, their limiting graph metrics, and "
            "a spanning-rooted-forest enumeration oracle.";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<NumericalError>(m, "NumericalError");

  py::class_<Edge>(m, "Edge")
      .def(py::init<int, int, double>(), py::arg("u"), py::arg("v"), py::arg("weight") = 1.0)
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def_readonly("weight", &Edge::weight)
      .def("__repr__", [](const Edge& e) {
        std::ostringstream out;
        out << "Edge(" << e.u << ", " << e.v << ", " << e.weight << ")";
        return out.str();
      });

  py::class_<WeightedMultigraph>(m, "WeightedMultigraph")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges) {
             std::vector<Edge> converted;
             converted.reserve(edges.size());
             for (const auto& [u, v, w] : edges) converted.push_back({u, v, w});
             return WeightedMultigraph(n, std::move(converted));
           }),
           py::arg("vertex_count"), py::arg("edges"),
           "Vertices are 0-based; parallel (u, v) tuples are kept as multi-edges.")
      .def_property_readonly("vertex_count", &WeightedMultigraph::vertex_count)
      .def_property_readonly("edges",
                             [](const WeightedMultigraph& g) { return g.edges(); });

  py::enum_<WeightTransform>(m, "WeightTransform")
      .value("LinearScale", WeightTransform::LinearScale)
      .value("PowerOfAlpha", WeightTransform::PowerOfAlpha)
      .value("ExpScaledByAlpha", WeightTransform::ExpScaledByAlpha)
      .value("PureExponential", WeightTransform::PureExponential);

  py::enum_<HVariant>(m, "HVariant")
      .value("Standard", HVariant::Standard)
      .value("AlphaLn", HVariant::AlphaLn);

  py::class_<GammaRule>(m, "GammaRule")
      .def_static("formula13", &GammaRule::formula13)
      .def_static("one", &GammaRule::one)
      .def_static("interpolating", &GammaRule::interpolating, py::arg("beta"))
      .def_static("constant", &GammaRule::constant, py::arg("c"))
      .def("value", &GammaRule::value, py::arg("alpha"), py::arg("n"));

  py::class_<FamilyConfig>(m, "FamilyConfig")
      .def(py::init<>())
      .def(py::init([](WeightTransform t, HVariant h, GammaRule g) {
             return FamilyConfig{t, h, g};
           }),
           py::arg("transform"), py::arg("h_variant"), py::arg("gamma"))
      .def_readwrite("transform", &FamilyConfig::transform)
      .def_readwrite("h_variant", &FamilyConfig::h_variant)
      .def_readwrite("gamma", &FamilyConfig::gamma);

  m.def("shortest_path_family", &shortest_path_family);
  m.def("wsp_family", &wsp_family);
  m.def("unified_family", &unified_family);

  m.def("parse_edge_list",
        py::overload_cast<const std::string&>(&parse_edge_list), py::arg("text"),
        "Parse the edge-list text format (1-based vertex ids in the text).");
  m.def("laplacian", &laplacian);
  m.def("total_weight_matrix", &total_weight_matrix);
  m.def("transform_weights", &transform_weights, py::arg("g"), py::arg("transform"),
        py::arg("alpha"));
  m.def("transform_admissible", &transform_admissible, py::arg("transform"), py::arg("alpha"));
  m.def("connected_components", &connected_components);
  m.def("remove_vertex",
        [](const WeightedMultigraph& g, int j) {
          Subgraph s = remove_vertex(g, j);
          return py::make_tuple(s.graph, s.old_ids);
        },
        py::arg("g"), py::arg("j"),
        "Returns (subgraph, old_ids) with old_ids[new_id] == original id.");

  m.def("invert_spd", &invert_spd);
  m.def("laplacian_pseudoinverse", &laplacian_pseudoinverse);
  m.def("elementwise_log", &elementwise_log, py::arg("m"), py::arg("base_factor"));

  py::class_<ForestTally>(m, "ForestTally")
      .def_readonly("f", &ForestTally::f)
      .def_readonly("f_ij", &ForestTally::f_ij)
      .def_readonly("f_p", &ForestTally::f_p)
      .def_readonly("f_p_total", &ForestTally::f_p_total)
      .def_readonly("t", &ForestTally::t);

  m.def("enumerate_rooted_forests", &enumerate_rooted_forests);
  py::class_<ForestCheckReport>(m, "ForestCheckReport")
      .def_readonly("max_rel_error", &ForestCheckReport::max_rel_error)
      .def_readonly("passed", &ForestCheckReport::passed);
  m.def("matrix_forest_check", &matrix_forest_check, py::arg("g"), py::arg("tol") = 1e-9);
  m.def("resistance_via_forests", &resistance_via_forests);

  m.def("shortest_path_matrix", &shortest_path_matrix);
  m.def("weighted_shortest_path_matrix", &weighted_shortest_path_matrix);
  m.def("resistance_matrix", &resistance_matrix);

  m.def("kernel_matrix", &kernel_matrix, py::arg("g"), py::arg("config"), py::arg("alpha"));
  m.def("log_forest_distance_matrix", &log_forest_distance_matrix, py::arg("g"),
        py::arg("config"), py::arg("alpha"));
  m.def("ordinary_forest_distance_matrix", &ordinary_forest_distance_matrix, py::arg("g"),
        py::arg("alpha"));

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("alpha", &ConvergenceRow::alpha)
      .def_readonly("max_error", &ConvergenceRow::max_error);
  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("rows", &ConvergenceReport::rows)
      .def("monotone_decreasing", &ConvergenceReport::monotone_decreasing,
           py::arg("slack") = 1.0);
  m.def("convergence_report", &convergence_report, py::arg("g"), py::arg("config"),
        py::arg("alphas"), py::arg("target"));

  m.def("separates", &separates, py::arg("g"), py::arg("i"), py::arg("j"), py::arg("k"));
  py::class_<GeodeticMismatch>(m, "GeodeticMismatch")
      .def_readonly("triple", &GeodeticMismatch::triple)
      .def_readonly("residual", &GeodeticMismatch::residual)
      .def_readonly("separated", &GeodeticMismatch::separated);
  py::class_<GeodeticReport>(m, "GeodeticReport")
      .def_readonly("triples_checked", &GeodeticReport::triples_checked)
      .def_readonly("equality_triples", &GeodeticReport::equality_triples)
      .def_readonly("separation_triples", &GeodeticReport::separation_triples)
      .def_readonly("mismatches", &GeodeticReport::mismatches)
      .def("passed", &GeodeticReport::passed);
  m.def("geodetic_tolerance", &geodetic_tolerance);
  m.def("verify_geodetic", &verify_geodetic, py::arg("g"), py::arg("d"), py::arg("tol"));

  m.def("matrix_to_csv", &matrix_to_csv);
  m.def("format_sig9", &format_sig9);
}
