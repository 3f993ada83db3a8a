#include "bvhnet/serialize.hpp"

#include <nlohmann/json.hpp>

namespace bvhnet {

namespace {

using nlohmann::json;

constexpr int kIndent = 2;

json label_json(const Graph& graph, NodeId node) { return graph.label(node).digits; }

json labels_json(const Graph& graph, const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId x : nodes) out.push_back(label_json(graph, x));
  return out;
}

json spec_json(const TopologySpec& spec) {
  return {{"family", to_string(spec.family)}, {"dimension", spec.dimension}, {"radix", spec.radix()}};
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

json ratio_json(const Ratio& r) { return {{"exact", r.to_string()}, {"value", r.value()}}; }

}  // namespace

std::string_view to_string(BvhRules rules) {
  return rules == BvhRules::Corrected ? "corrected" : "as-printed";
}

std::string_view to_string(RoutePolicy policy) {
  return policy == RoutePolicy::Greedy ? "greedy" : "oracle";
}

std::string graph_to_json(const Graph& graph) {
  if (!graph.spec()) throw std::invalid_argument("only family graphs serialize");
  json doc = spec_json(*graph.spec());
  json nodes = json::array();
  for (NodeId u = 0; u < graph.node_count(); ++u) nodes.push_back(label_json(graph, u));
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(kIndent) + "\n";
}

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    const TopologySpec spec(parse_family(doc.at("family").get<std::string>()),
                            doc.at("dimension").get<int>());
    if (doc.at("radix").get<int>() != spec.radix()) throw std::invalid_argument("radix mismatch");
    const auto& nodes = doc.at("nodes");
    if (nodes.size() != spec.node_count()) throw std::invalid_argument("node count mismatch");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const NodeLabel label{nodes[i].get<std::vector<int>>()};
      if (label_to_index(spec, label) != i) throw std::invalid_argument("nodes out of canonical order");
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
    return Graph::from_edges(nodes.size(), edges, spec);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad graph document: ") + e.what());
  }
}

std::string audit_to_json(const AdjacencyAuditReport& report) {
  json doc = spec_json(report.spec);
  doc["rules"] = to_string(report.rules);
  doc["expected_degree"] = report.expected_degree;
  doc["degree"] = report.degree;
  doc["degree_violations"] = report.degree_violations;
  json one_way = json::array();
  for (const auto& [u, v] : report.one_directional) one_way.push_back({u, v});
  doc["one_directional"] = std::move(one_way);
  doc["duplicate_emissions"] = report.duplicate_emissions;
  doc["matching_partners"] = report.matching_partners;
  doc["nodes_with_partner"] = report.nodes_with_partner();
  doc["matching_pairs_complete"] = report.matching_pairs_complete();
  return doc.dump(kIndent) + "\n";
}

std::string metrics_to_json(const MetricsReport& report) {
  const MeasuredMetrics& m = report.measured;
  const ClosedForm& cf = report.closed_form;
  const Agreement& a = report.agreement;
  json doc = spec_json(report.spec);
  doc["measured"] = {
      {"degree_min", m.degree_min},
      {"degree_max", m.degree_max},
      {"node_count", m.nodes},
      {"edge_count", m.edges},
      {"diameter", m.diameter},
      {"avg_distance_from_origin", ratio_json(m.avg_distance_from_origin)},
      {"avg_distance_all_pairs", ratio_json(m.avg_distance_all_pairs)},
      {"traffic_density", ratio_json(m.traffic_density)},
      {"cost", m.cost},
      {"uniform_distance_profile", m.uniform_distance_profile},
  };
  doc["closed_form"] = {
      {"degree", optional_json(cf.degree)},
      {"node_count", optional_json(cf.nodes)},
      {"edge_count", optional_json(cf.edges)},
      {"diameter", optional_json(cf.diameter)},
      {"cost", optional_json(cf.cost)},
      {"avg_distance_from_origin",
       cf.avg_distance_from_origin ? ratio_json(*cf.avg_distance_from_origin) : json(nullptr)},
  };
  doc["agreement"] = {
      {"degree", optional_json(a.degree)},
      {"node_count", optional_json(a.nodes)},
      {"edge_count", optional_json(a.edges)},
      {"diameter", optional_json(a.diameter)},
      {"cost", optional_json(a.cost)},
      {"avg_distance_from_origin", optional_json(a.avg_distance_from_origin)},
  };
  doc["deviations"] = report.deviations;
  return doc.dump(kIndent) + "\n";
}

std::string path_set_to_json(const Graph& graph, const DisjointPathSet& set) {
  json paths = json::array();
  for (const Path& p : set.paths) paths.push_back(labels_json(graph, p));
  const PathClassSet classes = classify_paths(set);
  json class_list = json::array();
  for (const PathClass& c : classes.classes()) {
    class_list.push_back({{"count", c.count}, {"links", c.links}, {"intermediates", c.intermediates}});
  }
  json doc = {{"source", label_json(graph, set.source)},
              {"target", label_json(graph, set.target)},
              {"paths", std::move(paths)},
              {"classes", std::move(class_list)}};
  return doc.dump(kIndent) + "\n";
}

std::string trace_to_json(const Graph& graph, const RouteTrace& trace) {
  json doc = {{"source", label_json(graph, trace.source)},
              {"target", label_json(graph, trace.target)},
              {"policy", to_string(trace.policy)},
              {"hops", labels_json(graph, trace.hops)},
              {"length", trace.length()},
              {"fell_back", trace.fell_back}};
  return doc.dump(kIndent) + "\n";
}

std::string schedule_to_json(const Graph& graph, const BroadcastSchedule& schedule) {
  json rounds = json::array();
  for (const auto& round : schedule.rounds) {
    json sends = json::array();
    for (const auto& [sender, receiver] : round) {
      sends.push_back({{"sender", label_json(graph, sender)}, {"receiver", label_json(graph, receiver)}});
    }
    rounds.push_back(std::move(sends));
  }
  json doc = {{"root", label_json(graph, schedule.root)}, {"rounds", std::move(rounds)}};
  return doc.dump(kIndent) + "\n";
}

}  // namespace bvhnet
