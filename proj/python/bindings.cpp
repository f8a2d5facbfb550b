#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rwlattice/io.hpp"
#include "rwlattice/lattice.hpp"
#include "rwlattice/metrics.hpp"
#include "rwlattice/oracle.hpp"
#include "rwlattice/roots.hpp"
#include "rwlattice/topology.hpp"

namespace py = pybind11;

namespace {

std::string histogram_csv(const rwl::PathLengthHistogram& h,
                          const rwl::TopologySpec& spec) {
  std::ostringstream os;
  rwl::write_histogram_csv(os, h, spec);
  return os.str();
}

std::string edgelist_text(const rwl::TopologySpec& spec, std::uint64_t budget) {
  std::ostringstream os;
  rwl::write_edgelist(os, spec, budget);
  return os.str();
}

std::string adjacency_matrixmarket_text(const rwl::TopologySpec& spec,
                                        std::uint64_t budget) {
  std::ostringstream os;
  rwl::write_adjacency_matrixmarket(os, spec, budget);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mesh, hypercube, and symplectic interconnect topologies: "
            "labeling, neighbor rules, closed-form metrics, and the "
            "brute-force BFS check.";

  py::register_exception<rwl::CapacityError>(m, "CapacityError",
                                             PyExc_RuntimeError);
  py::register_exception<rwl::DisconnectedError>(m, "DisconnectedError",
                                                 PyExc_RuntimeError);
  py::register_exception<rwl::DomainError>(m, "DomainError", PyExc_ValueError);

  py::enum_<rwl::Family>(m, "Family")
      .value("Mesh", rwl::Family::Mesh)
      .value("Hypercube", rwl::Family::Hypercube)
      .value("Symplectic", rwl::Family::Symplectic);

  py::enum_<rwl::NodeClass>(m, "NodeClass")
      .value("Bosonic", rwl::NodeClass::Bosonic)
      .value("Fermionic", rwl::NodeClass::Fermionic);

  py::class_<rwl::TopologySpec>(m, "TopologySpec")
      .def_static("mesh", &rwl::TopologySpec::mesh, py::arg("mu"), py::arg("n"))
      .def_static("hypercube", &rwl::TopologySpec::hypercube, py::arg("n"))
      .def_static("symplectic", &rwl::TopologySpec::symplectic, py::arg("M"),
                  py::arg("n"))
      .def_readonly("family", &rwl::TopologySpec::family)
      .def_readonly("n", &rwl::TopologySpec::n)
      .def_readonly("mu", &rwl::TopologySpec::mu)
      .def_readonly("M", &rwl::TopologySpec::M)
      .def("__eq__", [](const rwl::TopologySpec& a,
                        const rwl::TopologySpec& b) { return a == b; })
      .def("__str__", &rwl::format_spec)
      .def("__repr__", [](const rwl::TopologySpec& s) {
        return "TopologySpec('" + rwl::format_spec(s) + "')";
      });

  m.def("parse_spec", [](const std::string& s) { return rwl::parse_spec(s); },
        py::arg("text"));
  m.def("format_spec", &rwl::format_spec, py::arg("spec"));

  m.def("label", &rwl::label, py::arg("address"), py::arg("spec"));
  m.def("unlabel", &rwl::unlabel, py::arg("kappa"), py::arg("spec"));
  m.def("is_admissible", &rwl::is_admissible, py::arg("address"), py::arg("spec"));
  m.def("node_count", &rwl::node_count, py::arg("spec"));
  m.def("weight_index", &rwl::weight_index, py::arg("kappa"), py::arg("spec"));
  m.def("node_index", &rwl::node_index, py::arg("kappa"), py::arg("spec"));
  m.def("node_label", &rwl::node_label, py::arg("index"), py::arg("spec"));

  m.def("classify", &rwl::classify, py::arg("address"));
  m.def("neighbors", &rwl::neighbors, py::arg("kappa"), py::arg("spec"));
  m.def("degree", &rwl::degree, py::arg("kappa"), py::arg("spec"));
  m.def(
      "edges",
      [](const rwl::TopologySpec& spec, std::uint64_t budget) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        rwl::for_each_edge(
            spec, [&](const rwl::Edge& e) { out.emplace_back(e.u, e.v); }, budget);
        return out;
      },
      py::arg("spec"), py::arg("edge_budget") = rwl::kDefaultEdgeBudget,
      "Undirected edges as (u, v) label pairs, u < v, sorted.");
  m.def(
      "adjacency",
      [](const rwl::TopologySpec& spec, std::uint64_t budget) {
        auto matrix = rwl::adjacency_matrix(spec, budget);
        return py::make_tuple(matrix.dim, matrix.entries);
      },
      py::arg("spec"), py::arg("edge_budget") = rwl::kDefaultEdgeBudget,
      "(dim, [(i, j), ...]) sparse upper-triangle index pairs.");

  m.def("distance", &rwl::distance, py::arg("a"), py::arg("b"), py::arg("spec"));
  m.def("diameter", &rwl::diameter, py::arg("spec"));
  m.def("density", &rwl::density, py::arg("spec"));
  m.def("density_ratio", &rwl::density_ratio, py::arg("a"), py::arg("b"));

  py::class_<rwl::TopologySummary>(m, "TopologySummary")
      .def_readonly("nu", &rwl::TopologySummary::nu)
      .def_readonly("diameter", &rwl::TopologySummary::diameter)
      .def_readonly("eps_max", &rwl::TopologySummary::eps_max)
      .def_readonly("eps_min", &rwl::TopologySummary::eps_min)
      .def_readonly("rho", &rwl::TopologySummary::rho)
      .def_readonly("eps_max_enumerated",
                    &rwl::TopologySummary::eps_max_enumerated);
  m.def("summary", &rwl::summary, py::arg("spec"),
        py::arg("enumeration_budget") = rwl::kDefaultSummaryEnumerationBudget);

  py::class_<rwl::PathLengthHistogram> hist(m, "PathLengthHistogram");
  py::enum_<rwl::PathLengthHistogram::Mode>(hist, "Mode")
      .value("Exact", rwl::PathLengthHistogram::Mode::Exact)
      .value("Sampled", rwl::PathLengthHistogram::Mode::Sampled);
  hist.def_readonly("counts", &rwl::PathLengthHistogram::counts)
      .def_readonly("total_pairs", &rwl::PathLengthHistogram::total_pairs)
      .def_readonly("mode", &rwl::PathLengthHistogram::mode)
      .def_readonly("seed", &rwl::PathLengthHistogram::seed)
      .def_readonly("sample_size", &rwl::PathLengthHistogram::sample_size)
      .def("mean", &rwl::PathLengthHistogram::mean);

  m.def("path_length_histogram", &rwl::path_length_histogram, py::arg("spec"),
        py::arg("pair_budget") = rwl::kDefaultPairBudget, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("path_length_histogram_sampled", &rwl::path_length_histogram_sampled,
        py::arg("spec"), py::arg("sample_size"), py::arg("seed"),
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("mean_path_length", &rwl::mean_path_length, py::arg("histogram"));
  m.def("histogram_csv", &histogram_csv, py::arg("histogram"), py::arg("spec"));
  m.def("edgelist", &edgelist_text, py::arg("spec"),
        py::arg("edge_budget") = rwl::kDefaultEdgeBudget);
  m.def("adjacency_matrixmarket", &adjacency_matrixmarket_text, py::arg("spec"),
        py::arg("edge_budget") = rwl::kDefaultEdgeBudget);

  py::class_<rwl::DistanceMismatch>(m, "DistanceMismatch")
      .def_readonly("a", &rwl::DistanceMismatch::a)
      .def_readonly("b", &rwl::DistanceMismatch::b)
      .def_readonly("closed_form", &rwl::DistanceMismatch::closed_form)
      .def_readonly("bfs", &rwl::DistanceMismatch::bfs);

  py::class_<rwl::OracleReport>(m, "OracleReport")
      .def_readonly("spec", &rwl::OracleReport::spec)
      .def_readonly("pairs_checked", &rwl::OracleReport::pairs_checked)
      .def_readonly("mismatches", &rwl::OracleReport::mismatches)
      .def_readonly("max_degree_seen", &rwl::OracleReport::max_degree_seen)
      .def_readonly("min_degree_seen", &rwl::OracleReport::min_degree_seen)
      .def_readonly("expected_min_degree", &rwl::OracleReport::expected_min_degree)
      .def_readonly("expected_max_degree", &rwl::OracleReport::expected_max_degree)
      .def_readonly("expected_max_is_bound",
                    &rwl::OracleReport::expected_max_is_bound)
      .def_readonly("degree_bounds_ok", &rwl::OracleReport::degree_bounds_ok)
      .def("ok", &rwl::OracleReport::ok);

  m.def("bfs_distances", &rwl::bfs_distances, py::arg("source"), py::arg("spec"),
        py::arg("node_budget") = rwl::kDefaultBfsNodeBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_distances", &rwl::verify_distances, py::arg("spec"),
        py::arg("node_budget") = rwl::kDefaultVerifyNodeBudget,
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("verify_degree_bounds", &rwl::verify_degree_bounds, py::arg("spec"),
        py::arg("node_budget") = rwl::kDefaultBfsNodeBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("report_text", &rwl::report_text, py::arg("report"));

  m.attr("__version__") = "0.1.0";
}
