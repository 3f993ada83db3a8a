#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bvhnet/cli.hpp"
#include "bvhnet/comms.hpp"
#include "bvhnet/metrics.hpp"
#include "bvhnet/paths.hpp"
#include "bvhnet/reliability.hpp"
#include "bvhnet/serialize.hpp"
#include "bvhnet/topology.hpp"

namespace py = pybind11;
using namespace bvhnet;

namespace {

using Digits = std::vector<int>;

NodeId node_of(const Graph& g, const Digits& digits) { return g.id_of(NodeLabel{digits}); }

std::vector<Digits> labels_of(const Graph& g, const std::vector<NodeId>& nodes) {
  std::vector<Digits> out;
  out.reserve(nodes.size());
  for (NodeId x : nodes) out.push_back(g.label(x).digits);
  return out;
}

PathClassSet classes_from_tuples(const std::vector<std::tuple<int, int, int>>& tuples) {
  std::vector<PathClass> classes;
  for (const auto& [count, links, intermediates] : tuples) classes.push_back({count, links, intermediates});
  return PathClassSet::from_classes(std::move(classes));
}

std::vector<std::tuple<int, int, int>> tuples_of(const PathClassSet& set) {
  std::vector<std::tuple<int, int, int>> out;
  for (const PathClass& c : set.classes()) out.emplace_back(c.count, c.links, c.intermediates);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypercube-family topology construction, metrics, disjoint paths and reliability.";

  py::register_exception<MalformedLabelError>(m, "MalformedLabelError", PyExc_ValueError);
  py::register_exception<UnsupportedFamilyError>(m, "UnsupportedFamilyError", PyExc_ValueError);

  py::enum_<Family>(m, "Family")
      .value("HC", Family::HC)
      .value("VQ", Family::VQ)
      .value("BH", Family::BH)
      .value("BVH", Family::BVH);

  py::enum_<BvhRules>(m, "BvhRules")
      .value("Corrected", BvhRules::Corrected)
      .value("AsPrinted", BvhRules::AsPrinted);

  py::class_<TopologySpec>(m, "TopologySpec")
      .def(py::init<Family, int>(), py::arg("family"), py::arg("dimension"))
      .def_readonly("family", &TopologySpec::family)
      .def_readonly("dimension", &TopologySpec::dimension)
      .def_property_readonly("radix", &TopologySpec::radix)
      .def_property_readonly("node_count", &TopologySpec::node_count)
      .def_property_readonly("expected_degree", &TopologySpec::expected_degree);

  m.def(
      "neighbors",
      [](const TopologySpec& spec, const Digits& label, BvhRules rules) {
        std::vector<Digits> out;
        for (const NodeLabel& l : family_neighbors(spec, NodeLabel{label}, rules)) out.push_back(l.digits);
        return out;
      },
      py::arg("spec"), py::arg("label"), py::arg("rules") = BvhRules::Corrected);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("spec", [](const Graph& g) { return g.spec(); })
      .def("label", [](const Graph& g, NodeId x) { return g.label(x).digits; })
      .def("id_of", &node_of)
      .def("neighbors", [](const Graph& g, NodeId x) {
        const auto n = g.neighbors(x);
        return std::vector<NodeId>(n.begin(), n.end());
      })
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("to_json", &graph_to_json);

  m.def("build_graph", &build_graph, py::arg("spec"), py::arg("rules") = BvhRules::Corrected);
  m.def("graph_from_json", &graph_from_json);
  m.def("audit_json", [](const TopologySpec& spec, BvhRules rules) { return audit_to_json(audit_graph(spec, rules)); },
        py::arg("spec"), py::arg("rules") = BvhRules::Corrected);

  m.def("bfs_distances", &bfs_distances);
  m.def("diameter", [](const Graph& g) { return diameter(g); });
  m.def(
      "average_distance",
      [](const Graph& g, const std::string& mode) {
        if (mode == "from_origin") return average_distance(g, AverageMode::FromOrigin).value();
        if (mode == "all_pairs") return average_distance(g, AverageMode::AllPairs).value();
        throw py::value_error("mode must be 'from_origin' or 'all_pairs'");
      },
      py::arg("graph"), py::arg("mode") = "from_origin");
  m.def("traffic_density", [](const Graph& g) { return traffic_density(g).value(); });
  m.def("cost", &cost);
  m.def("cef", &cef, py::arg("n"), py::arg("rho"));
  m.def("tcef", &tcef, py::arg("n"), py::arg("rho"));
  m.def("metrics_json", [](const Graph& g) { return metrics_to_json(compute_metrics(g)); });

  m.def("max_disjoint_paths", [](const Graph& g, const Digits& s, const Digits& t) {
    const DisjointPathSet set = max_disjoint_paths(g, node_of(g, s), node_of(g, t));
    std::vector<std::vector<Digits>> out;
    for (const Path& p : set.paths) out.push_back(labels_of(g, p));
    return out;
  });
  m.def("path_classes", [](const Graph& g, const Digits& s, const Digits& t) {
    return tuples_of(classify_paths(max_disjoint_paths(g, node_of(g, s), node_of(g, t))));
  });

  m.def("route_greedy", [](const Graph& g, const Digits& u, const Digits& v) {
    return labels_of(g, route_greedy(g, node_of(g, u), node_of(g, v)).hops);
  });
  m.def("route_oracle", [](const Graph& g, const Digits& u, const Digits& v) {
    return labels_of(g, route_oracle(g, node_of(g, u), node_of(g, v)).hops);
  });
  m.def("broadcast_rounds", [](const Graph& g, const Digits& root) {
    const BroadcastSchedule schedule = broadcast_schedule(g, node_of(g, root));
    std::vector<std::vector<std::pair<Digits, Digits>>> rounds;
    for (const auto& round : schedule.rounds) {
      auto& r = rounds.emplace_back();
      for (const auto& [sender, receiver] : round) r.emplace_back(g.label(sender).digits, g.label(receiver).digits);
    }
    return rounds;
  });

  m.def("component_reliability", &component_reliability, py::arg("lam"), py::arg("t"));
  m.def(
      "terminal_reliability",
      [](const std::vector<std::tuple<int, int, int>>& classes, double r_link, double r_proc) {
        return terminal_reliability(classes_from_tuples(classes), r_link, r_proc);
      },
      py::arg("classes"), py::arg("r_link"), py::arg("r_proc"));
  m.def(
      "terminal_reliability_curve",
      [](const std::vector<std::tuple<int, int, int>>& classes, double lambda_link, double lambda_proc,
         const std::vector<double>& times) {
        std::vector<std::pair<double, double>> out;
        for (const CurvePoint& p : terminal_reliability_curve(classes_from_tuples(classes), lambda_link, lambda_proc, times)) {
          out.emplace_back(p.t, p.reliability);
        }
        return out;
      },
      py::arg("classes"), py::arg("lambda_link"), py::arg("lambda_proc"), py::arg("times"));

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "bvhnet");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  });

#ifdef BVHNET_VERSION
  m.attr("__version__") = BVHNET_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
