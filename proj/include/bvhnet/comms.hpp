#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bvhnet/topology.hpp"

namespace bvhnet {

enum class RoutePolicy { Greedy, Oracle };

struct RouteTrace {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<NodeId> hops;
  RoutePolicy policy = RoutePolicy::Oracle;
  /// Set when the greedy router ran out of unvisited candidates and finished
  /// by pure distance descent.
  bool fell_back = false;

  std::size_t length() const { return hops.empty() ? 0 : hops.size() - 1; }
};

/// Shortest path; at every step the smallest-index neighbour one hop closer
/// to the target is taken.
RouteTrace route_oracle(const Graph& graph, NodeId u, NodeId v);

/// Digit-correcting router for BVH graphs. At each hop let r be the highest
/// index where the current label differs from the target. Among unvisited
/// neighbours, prefer one that makes digit r match, then one strictly closer
/// to the target by BFS distance, then the smallest label. Throws
/// UnsupportedFamilyError for graphs that are not BVH.
RouteTrace route_greedy(const Graph& graph, NodeId u, NodeId v);

/// Problems with a trace (empty when valid).
std::vector<std::string> trace_violations(const Graph& graph, const RouteTrace& trace);

using Transmission = std::pair<NodeId, NodeId>;  // (sender, receiver)

struct BroadcastSchedule {
  NodeId root = 0;
  /// rounds[r] holds the transmissions of round r + 1, sorted.
  std::vector<std::vector<Transmission>> rounds;
};

/// All-port broadcast: in each round every informed node forwards to its
/// uninformed neighbours; a node with several informed neighbours hears from
/// the smallest-index one. Takes eccentricity(root) rounds.
BroadcastSchedule broadcast_schedule(const Graph& graph, NodeId root);

/// Problems with a schedule (empty when valid): uninformed senders,
/// non-edges, repeated or missing receivers, port over-subscription.
std::vector<std::string> schedule_violations(const Graph& graph, const BroadcastSchedule& schedule);

}  // namespace bvhnet
