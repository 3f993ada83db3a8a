#include "bvhnet/paths.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace bvhnet {

namespace {

// Residual network over the node-split graph: in(v) = 2v, out(v) = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& graph, NodeId s, NodeId t) : arcs_of_(2 * graph.node_count()) {
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      if (v != s && v != t) add_arc(in(v), out(v));
    }
    for (NodeId u = 0; u < graph.node_count(); ++u) {
      if (u == t) continue;
      for (NodeId v : graph.neighbors(u)) {
        if (v != s) add_arc(out(u), in(v));
      }
    }
  }

  static std::size_t in(NodeId v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(NodeId v) { return 2 * static_cast<std::size_t>(v) + 1; }

  /// One BFS augmentation; false when no augmenting path remains.
  bool augment(std::size_t source, std::size_t sink) {
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(arcs_of_.size(), kNone);
    std::vector<std::size_t> queue{source};
    std::vector<bool> seen(arcs_of_.size(), false);
    seen[source] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
      const std::size_t x = queue[head];
      for (std::size_t a : arcs_of_[x]) {
        const Arc& arc = arcs_[a];
        if (arc.residual() > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          via[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t x = sink; x != source;) {
      const std::size_t a = via[x];
      arcs_[a].flow += 1;
      arcs_[a ^ 1].flow -= 1;
      x = arcs_[a ^ 1].to;
    }
    return true;
  }

  /// Forward arcs leaving `x` that carry flow, in insertion order.
  std::vector<std::size_t> saturated_heads(std::size_t x) const {
    std::vector<std::size_t> heads;
    for (std::size_t a : arcs_of_[x]) {
      if (a % 2 == 0 && arcs_[a].flow > 0) heads.push_back(arcs_[a].to);
    }
    return heads;
  }

 private:
  struct Arc {
    std::size_t to;
    int capacity;
    int flow;
    int residual() const { return capacity - flow; }
  };

  // Arcs are stored in pairs; arc a's reverse is a ^ 1.
  void add_arc(std::size_t from, std::size_t to) {
    arcs_of_[from].push_back(arcs_.size());
    arcs_.push_back({to, 1, 0});
    arcs_of_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0, 0});
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> arcs_of_;
};

}  // namespace

DisjointPathSet max_disjoint_paths(const Graph& graph, NodeId s, NodeId t) {
  if (!graph.contains(s) || !graph.contains(t)) throw std::out_of_range("endpoint not in graph");
  if (s == t) throw std::domain_error("source and target must differ");

  SplitNetwork net(graph, s, t);
  const std::size_t source = SplitNetwork::out(s);
  const std::size_t sink = SplitNetwork::in(t);
  while (net.augment(source, sink)) {
  }

  DisjointPathSet set{s, t, {}};
  for (std::size_t first : net.saturated_heads(source)) {
    Path path{s};
    std::size_t x = first;
    while (x != sink) {
      const auto v = static_cast<NodeId>(x / 2);
      path.push_back(v);
      // Interior nodes carry one unit: in(v) -> out(v) -> in(next).
      x = net.saturated_heads(net.saturated_heads(x).front()).front();
    }
    path.push_back(t);
    set.paths.push_back(std::move(path));
  }
  return set;
}

std::vector<std::string> path_set_violations(const Graph& graph, const DisjointPathSet& set) {
  std::vector<std::string> problems;
  std::set<NodeId> interiors;
  for (std::size_t i = 0; i < set.paths.size(); ++i) {
    const Path& p = set.paths[i];
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (p.size() < 2 || p.front() != set.source || p.back() != set.target) {
      problems.push_back(tag + "wrong endpoints");
      continue;
    }
    std::set<NodeId> seen;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!graph.contains(p[k])) {
        problems.push_back(tag + "node " + std::to_string(p[k]) + " not in graph");
        continue;
      }
      if (!seen.insert(p[k]).second) problems.push_back(tag + "repeats node " + std::to_string(p[k]));
      if (k + 1 < p.size() && (!graph.contains(p[k + 1]) || !graph.has_edge(p[k], p[k + 1]))) {
        problems.push_back(tag + "non-edge " + std::to_string(p[k]) + "-" + std::to_string(p[k + 1]));
      }
      if (k > 0 && k + 1 < p.size() && !interiors.insert(p[k]).second) {
        problems.push_back(tag + "shares interior node " + std::to_string(p[k]));
      }
    }
  }
  return problems;
}

int vertex_connectivity(const Graph& graph) {
  const auto count = static_cast<NodeId>(graph.node_count());
  if (count < 2) return 0;
  int best = graph.min_degree();
  for (NodeId s = 0; s < count; ++s) {
    for (NodeId t = s + 1; t < count; ++t) {
      best = std::min(best, static_cast<int>(max_disjoint_paths(graph, s, t).paths.size()));
    }
  }
  return best;
}

PathClassSet PathClassSet::from_classes(std::vector<PathClass> classes) {
  std::map<std::pair<int, int>, int> merged;
  for (const PathClass& c : classes) {
    if (c.count < 1) throw std::invalid_argument("path class count must be positive");
    if (c.intermediates < 0 || c.links != c.intermediates + 1) {
      throw std::invalid_argument("path class needs links == intermediates + 1");
    }
    merged[{c.links, c.intermediates}] += c.count;
  }
  PathClassSet set;
  for (const auto& [key, count] : merged) set.classes_.push_back({count, key.first, key.second});
  return set;
}

int PathClassSet::total_paths() const {
  int total = 0;
  for (const PathClass& c : classes_) total += c.count;
  return total;
}

std::string PathClassSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i != 0) out += ",";
    out += "(" + std::to_string(classes_[i].count) + "," + std::to_string(classes_[i].links) + "," +
           std::to_string(classes_[i].intermediates) + ")";
  }
  return out + "}";
}

PathClassSet classify_paths(const DisjointPathSet& set) {
  std::vector<PathClass> classes;
  for (const Path& p : set.paths) {
    const int links = static_cast<int>(p.size()) - 1;
    classes.push_back({1, links, links - 1});
  }
  PathClassSet out = PathClassSet::from_classes(std::move(classes));
  out.endpoints = std::make_pair(set.source, set.target);
  return out;
}

}  // namespace bvhnet
