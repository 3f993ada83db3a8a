#include "bvhnet/comms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "bvhnet/metrics.hpp"

namespace bvhnet {

namespace {

void require_nodes(const Graph& graph, NodeId u, NodeId v) {
  if (!graph.contains(u) || !graph.contains(v)) throw std::out_of_range("endpoint not in graph");
}

NodeId next_hop_down(const Graph& graph, const std::vector<int>& to_target, NodeId at) {
  for (NodeId w : graph.neighbors(at)) {
    if (to_target[w] == to_target[at] - 1) return w;
  }
  throw std::logic_error("no neighbour closer to the target; graph is disconnected");
}

}  // namespace

RouteTrace route_oracle(const Graph& graph, NodeId u, NodeId v) {
  require_nodes(graph, u, v);
  const auto to_target = bfs_distances(graph, v);
  if (to_target[u] < 0) throw std::invalid_argument("target unreachable");
  RouteTrace trace{u, v, {u}, RoutePolicy::Oracle, false};
  for (NodeId at = u; at != v;) {
    at = next_hop_down(graph, to_target, at);
    trace.hops.push_back(at);
  }
  return trace;
}

RouteTrace route_greedy(const Graph& graph, NodeId u, NodeId v) {
  require_nodes(graph, u, v);
  if (!graph.spec() || graph.spec()->family != Family::BVH) {
    throw UnsupportedFamilyError("greedy routing is defined for BVH graphs only");
  }
  const auto to_target = bfs_distances(graph, v);
  const NodeLabel goal = graph.label(v);
  RouteTrace trace{u, v, {u}, RoutePolicy::Greedy, false};
  std::vector<bool> visited(graph.node_count(), false);
  visited[u] = true;

  NodeId at = u;
  while (at != v) {
    const NodeLabel here = graph.label(at);
    int r = static_cast<int>(here.digits.size()) - 1;
    while (here.digits[static_cast<std::size_t>(r)] == goal.digits[static_cast<std::size_t>(r)]) --r;

    bool found = false;
    std::tuple<bool, bool, NodeId> best{};
    for (NodeId w : graph.neighbors(at)) {
      if (visited[w]) continue;
      const bool fixes = graph.label(w).digits[static_cast<std::size_t>(r)] ==
                         goal.digits[static_cast<std::size_t>(r)];
      const bool closer = to_target[w] < to_target[at];
      // Smaller tuple wins: fixing and approaching sort first.
      const std::tuple<bool, bool, NodeId> key{!fixes, !closer, w};
      if (!found || key < best) {
        best = key;
        found = true;
      }
    }
    if (!found) {
      trace.fell_back = true;
      while (at != v) {
        at = next_hop_down(graph, to_target, at);
        trace.hops.push_back(at);
      }
      break;
    }
    at = std::get<2>(best);
    visited[at] = true;
    trace.hops.push_back(at);
  }
  return trace;
}

std::vector<std::string> trace_violations(const Graph& graph, const RouteTrace& trace) {
  std::vector<std::string> problems;
  if (trace.hops.empty() || trace.hops.front() != trace.source || trace.hops.back() != trace.target) {
    problems.emplace_back("trace does not run from source to target");
    return problems;
  }
  std::vector<bool> seen(graph.node_count(), false);
  for (std::size_t k = 0; k < trace.hops.size(); ++k) {
    const NodeId x = trace.hops[k];
    if (seen[x]) problems.push_back("node " + std::to_string(x) + " repeated");
    seen[x] = true;
    if (k + 1 < trace.hops.size() && !graph.has_edge(x, trace.hops[k + 1])) {
      problems.push_back("non-edge " + std::to_string(x) + "-" + std::to_string(trace.hops[k + 1]));
    }
  }
  if (trace.policy == RoutePolicy::Oracle) {
    const auto dist = bfs_distances(graph, trace.source);
    if (static_cast<int>(trace.length()) != dist[trace.target]) {
      problems.emplace_back("oracle trace is not a shortest path");
    }
  }
  return problems;
}

BroadcastSchedule broadcast_schedule(const Graph& graph, NodeId root) {
  if (!graph.contains(root)) throw std::out_of_range("root not in graph");
  const auto dist = bfs_distances(graph, root);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw std::invalid_argument("graph is disconnected");
  }
  const int rounds = *std::max_element(dist.begin(), dist.end());
  BroadcastSchedule schedule{root, std::vector<std::vector<Transmission>>(static_cast<std::size_t>(rounds))};
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    if (x == root) continue;
    // Neighbour lists are sorted, so the first informed neighbour is the
    // smallest; informed-by-round-(d-1) neighbours are exactly those at d-1.
    for (NodeId w : graph.neighbors(x)) {
      if (dist[w] == dist[x] - 1) {
        schedule.rounds[static_cast<std::size_t>(dist[x] - 1)].emplace_back(w, x);
        break;
      }
    }
  }
  for (auto& round : schedule.rounds) std::sort(round.begin(), round.end());
  return schedule;
}

std::vector<std::string> schedule_violations(const Graph& graph, const BroadcastSchedule& schedule) {
  std::vector<std::string> problems;
  if (!graph.contains(schedule.root)) return {"root not in graph"};
  std::vector<int> informed_at(graph.node_count(), -1);
  informed_at[schedule.root] = 0;
  for (std::size_t r = 0; r < schedule.rounds.size(); ++r) {
    const int round = static_cast<int>(r) + 1;
    std::map<NodeId, int> sends;
    for (const auto& [sender, receiver] : schedule.rounds[r]) {
      const std::string tag = "round " + std::to_string(round) + " " + std::to_string(sender) +
                              "->" + std::to_string(receiver) + ": ";
      if (!graph.contains(sender) || !graph.contains(receiver)) {
        problems.push_back(tag + "node not in graph");
        continue;
      }
      if (informed_at[sender] < 0 || informed_at[sender] >= round) {
        problems.push_back(tag + "sender not yet informed");
      }
      if (!graph.has_edge(sender, receiver)) problems.push_back(tag + "not an edge");
      if (informed_at[receiver] >= 0) {
        problems.push_back(tag + "receiver already informed");
      } else {
        informed_at[receiver] = round;
      }
      if (++sends[sender] > graph.degree(sender)) problems.push_back(tag + "exceeds port count");
    }
  }
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    if (informed_at[x] < 0) problems.push_back("node " + std::to_string(x) + " never informed");
  }
  return problems;
}

}  // namespace bvhnet
