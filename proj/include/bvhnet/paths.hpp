#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvhnet/topology.hpp"

namespace bvhnet {

using Path = std::vector<NodeId>;

struct DisjointPathSet {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<Path> paths;
};

/// Maximum set of internally vertex-disjoint source-target paths, found by
/// unit-capacity augmenting paths on the node-split graph. Augmentation and
/// decomposition both scan neighbours in index order, so the result is
/// deterministic. Throws std::domain_error when s == t.
DisjointPathSet max_disjoint_paths(const Graph& graph, NodeId s, NodeId t);

/// Structural problems with a path set (empty when it is valid): wrong
/// endpoints, non-edges, repeated nodes, shared interior nodes.
std::vector<std::string> path_set_violations(const Graph& graph, const DisjointPathSet& set);

/// Minimum over all node pairs of the local connectivity. Quadratic in the
/// node count; intended for the small instances the tests enumerate.
int vertex_connectivity(const Graph& graph);

/// k paths, each with `links` edges and `intermediates` interior nodes.
struct PathClass {
  int count = 0;
  int links = 0;
  int intermediates = 0;

  friend auto operator<=>(const PathClass&, const PathClass&) = default;
};

class PathClassSet {
 public:
  PathClassSet() = default;

  /// Merges classes with equal (links, intermediates). Throws
  /// std::invalid_argument unless count >= 1 and links == intermediates + 1.
  static PathClassSet from_classes(std::vector<PathClass> classes);

  /// Sorted by (links, intermediates).
  const std::vector<PathClass>& classes() const { return classes_; }
  int total_paths() const;
  bool empty() const { return classes_.empty(); }
  std::string to_string() const;

  std::optional<std::pair<NodeId, NodeId>> endpoints;

  /// Compares classes only.
  friend bool operator==(const PathClassSet& a, const PathClassSet& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<PathClass> classes_;
};

PathClassSet classify_paths(const DisjointPathSet& set);

}  // namespace bvhnet
