#pragma once

#include <string>
#include <string_view>

#include "bvhnet/comms.hpp"
#include "bvhnet/metrics.hpp"
#include "bvhnet/paths.hpp"
#include "bvhnet/topology.hpp"

// Structured-text (JSON) forms. Object keys are emitted in sorted order and
// arrays in index order, so equal values serialize to identical bytes.
namespace bvhnet {

/// {"dimension", "edges": [[u, v], ...], "family", "nodes": [[digits], ...], "radix"}
std::string graph_to_json(const Graph& graph);

/// Inverse of graph_to_json() for family graphs. Throws std::invalid_argument
/// if the document is malformed or inconsistent with its family/dimension.
Graph graph_from_json(std::string_view text);

std::string audit_to_json(const AdjacencyAuditReport& report);
std::string metrics_to_json(const MetricsReport& report);
std::string path_set_to_json(const Graph& graph, const DisjointPathSet& set);
std::string trace_to_json(const Graph& graph, const RouteTrace& trace);
std::string schedule_to_json(const Graph& graph, const BroadcastSchedule& schedule);

std::string_view to_string(BvhRules rules);
std::string_view to_string(RoutePolicy policy);

}  // namespace bvhnet
