#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvhnet {

/// Network family. HC and VQ use binary labels, BH and BVH quaternary ones.
enum class Family { HC, VQ, BH, BVH };

std::string_view to_string(Family family);

/// Accepts "hc", "vq", "bh", "bvh" in any case.
Family parse_family(std::string_view text);

using NodeId = std::uint32_t;

/// Largest graph build_graph() will materialize.
inline constexpr std::uint64_t kMaxBuildNodes = std::uint64_t{1} << 20;

class MalformedLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TopologySpec {
  Family family;
  int dimension;

  /// Throws std::invalid_argument unless 1 <= dimension and the node count
  /// fits in 62 bits.
  TopologySpec(Family family, int dimension);

  int radix() const { return family == Family::HC || family == Family::VQ ? 2 : 4; }
  std::uint64_t node_count() const;
  /// n for HC/VQ, 2n for BH/BVH.
  int expected_degree() const;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

/// Fixed-length digit vector. digits[0] is a_0, the inner coordinate of
/// BH/BVH labels. Ordering is lexicographic with digits[0] most significant.
struct NodeLabel {
  std::vector<int> digits;

  /// Comma-separated digits, e.g. "0,3,1".
  std::string to_string() const;
  /// Inverse of to_string(). Throws MalformedLabelError on bad syntax.
  static NodeLabel parse(std::string_view text);

  friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;
  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Throws MalformedLabelError if the label has the wrong length or a digit
/// outside [0, radix).
void validate_label(const TopologySpec& spec, const NodeLabel& label);

/// Position of the label in lexicographic order.
NodeId label_to_index(const TopologySpec& spec, const NodeLabel& label);
NodeLabel index_to_label(const TopologySpec& spec, NodeId index);

/// Which transcription of the BVH outer-node table to use. AsPrinted repeats
/// the Case III(ii) line verbatim; Corrected replaces the second emission
/// with ((a_0 - 1) mod 4, ..., (a_i + 1) mod 4, ...).
enum class BvhRules { Corrected, AsPrinted };

// Neighbour rules. Each returns the sorted, de-duplicated set the family's
// rule emits for `label`. The family-specific functions throw
// UnsupportedFamilyError if spec.family does not match, and all of them throw
// MalformedLabelError for labels that do not fit the spec.
std::vector<NodeLabel> hc_neighbors(const TopologySpec& spec, const NodeLabel& label);
std::vector<NodeLabel> vq_neighbors(const TopologySpec& spec, const NodeLabel& label);
std::vector<NodeLabel> bh_neighbors(const TopologySpec& spec, const NodeLabel& label);
std::vector<NodeLabel> bvh_neighbors(const TopologySpec& spec, const NodeLabel& label,
                                     BvhRules rules = BvhRules::Corrected);
std::vector<NodeLabel> family_neighbors(const TopologySpec& spec, const NodeLabel& label,
                                        BvhRules rules = BvhRules::Corrected);

/// Raw emissions of the family's rule in rule order, duplicates kept.
std::vector<NodeLabel> literal_emissions(const TopologySpec& spec, const NodeLabel& label,
                                         BvhRules rules = BvhRules::Corrected);

/// Immutable undirected simple graph in compressed adjacency form. Neighbour
/// lists are sorted by node index, which equals lexicographic label order.
class Graph {
 public:
  /// Builds a generic graph from an edge list. Self-loops and out-of-range
  /// endpoints throw std::invalid_argument; duplicate edges are merged.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          std::optional<TopologySpec> spec = std::nullopt);

  const std::optional<TopologySpec>& spec() const { return spec_; }
  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId node) const;
  int degree(NodeId node) const { return static_cast<int>(neighbors(node).size()); }
  int min_degree() const;
  int max_degree() const;
  bool has_edge(NodeId u, NodeId v) const;
  bool contains(NodeId node) const { return node < node_count(); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// For family graphs the node's label; for generic graphs a single digit
  /// holding the index.
  NodeLabel label(NodeId node) const;
  /// Throws MalformedLabelError if the label does not belong to the graph.
  NodeId id_of(const NodeLabel& label) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::optional<TopologySpec> spec_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
};

/// Thrown when a family's rules produce a disconnected graph.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::vector<std::vector<NodeId>> components)
      : std::runtime_error(what), components_(std::move(components)) {}

  const std::vector<std::vector<NodeId>>& components() const { return components_; }

 private:
  std::vector<std::vector<NodeId>> components_;
};

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& graph);

/// Materializes the family's graph as the symmetric closure of its neighbour
/// rule over all labels. Throws std::length_error above kMaxBuildNodes and
/// ConstructionError if the result is disconnected.
Graph build_graph(const TopologySpec& spec, BvhRules rules = BvhRules::Corrected);

struct AdjacencyAuditReport {
  TopologySpec spec{Family::HC, 1};
  BvhRules rules = BvhRules::Corrected;
  int expected_degree = 0;
  /// Degree of every node after symmetric closure.
  std::vector<int> degree;
  std::vector<NodeId> degree_violations;
  /// (u, v) where u's rule emits v but v's rule does not emit u.
  std::vector<std::pair<NodeId, NodeId>> one_directional;
  std::size_t duplicate_emissions = 0;
  /// For each node, the other nodes sharing its full neighbourhood.
  std::vector<std::vector<NodeId>> matching_partners;

  std::size_t nodes_with_partner() const;
  /// True when every node has exactly one partner.
  bool matching_pairs_complete() const;
};

AdjacencyAuditReport audit_graph(const TopologySpec& spec, BvhRules rules = BvhRules::Corrected);

}  // namespace bvhnet
