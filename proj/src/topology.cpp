#include "bvhnet/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace bvhnet {

namespace {

int mod(int value, int radix) {
  const int r = value % radix;
  return r < 0 ? r + radix : r;
}

void require_family(const TopologySpec& spec, Family expected) {
  if (spec.family != expected) {
    throw UnsupportedFamilyError(std::string("rule for ") + std::string(to_string(expected)) +
                                 " applied to a " + std::string(to_string(spec.family)) +
                                 " spec");
  }
}

NodeLabel with_digits(const NodeLabel& base, int a0, int i = -1, int ai = 0) {
  NodeLabel out = base;
  out.digits[0] = a0;
  if (i >= 0) out.digits[static_cast<std::size_t>(i)] = ai;
  return out;
}

std::vector<NodeLabel> sorted_unique(std::vector<NodeLabel> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::vector<NodeLabel> hc_emissions(const NodeLabel& label) {
  std::vector<NodeLabel> out;
  out.reserve(label.digits.size());
  for (std::size_t i = 0; i < label.digits.size(); ++i) {
    NodeLabel next = label;
    next.digits[i] ^= 1;
    out.push_back(std::move(next));
  }
  return out;
}

// digits[k] holds u_{k+1}; digits[n-1] selects the half at the top level.
// The edge across level k flips u_k, and at levels divisible by three it also
// maps (u_{k-1}u_{k-2}) through {00->00, 01->01, 10->11, 11->10}.
std::vector<NodeLabel> vq_emissions(const NodeLabel& label) {
  const auto n = label.digits.size();
  std::vector<NodeLabel> out;
  out.reserve(n);
  for (std::size_t level = 1; level <= n; ++level) {
    NodeLabel next = label;
    next.digits[level - 1] ^= 1;
    if (level % 3 == 0 && next.digits[level - 2] == 1) next.digits[level - 3] ^= 1;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<NodeLabel> bh_emissions(const NodeLabel& label) {
  const int a0 = label.digits[0];
  const int step = a0 % 2 == 0 ? 1 : -1;
  std::vector<NodeLabel> out;
  out.push_back(with_digits(label, mod(a0 + 1, 4)));
  out.push_back(with_digits(label, mod(a0 - 1, 4)));
  for (int i = 1; i < static_cast<int>(label.digits.size()); ++i) {
    const int ai = mod(label.digits[static_cast<std::size_t>(i)] + step, 4);
    out.push_back(with_digits(label, mod(a0 + 1, 4), i, ai));
    out.push_back(with_digits(label, mod(a0 - 1, 4), i, ai));
  }
  return out;
}

struct OuterPair {
  int d0_first, di_first;
  int d0_second, di_second;
};

// Offsets (to a_0, to a_i) of the two outer neighbours along dimension i.
OuterPair bvh_outer(int a0, int ai, BvhRules rules) {
  if ((a0 == 0 || a0 == 3) && ai == 0) return {+1, +1, -1, +1};
  if ((a0 == 0 || a0 == 3) && ai == 3) return {+1, -1, -1, -1};
  if ((a0 == 1 || a0 == 2) && (ai == 0 || ai == 3)) return {+1, +2, -1, +2};
  if (a0 <= 1 && ai == 1) return {+1, +2, -1, -1};
  if (a0 <= 1 && ai == 2) {
    return rules == BvhRules::Corrected ? OuterPair{+1, +2, -1, +1} : OuterPair{+1, +2, +1, +2};
  }
  if (ai == 1) return {+1, -1, -1, +2};
  return {+1, +1, -1, +2};
}

std::vector<NodeLabel> bvh_emissions(const NodeLabel& label, BvhRules rules) {
  const int a0 = label.digits[0];
  std::vector<NodeLabel> out;
  if (a0 % 2 == 0) {
    out.push_back(with_digits(label, mod(a0 + 1, 4)));
    out.push_back(with_digits(label, mod(a0 - 2, 4)));
  } else {
    out.push_back(with_digits(label, mod(a0 - 1, 4)));
    out.push_back(with_digits(label, mod(a0 + 2, 4)));
  }
  for (int i = 1; i < static_cast<int>(label.digits.size()); ++i) {
    const int ai = label.digits[static_cast<std::size_t>(i)];
    const OuterPair p = bvh_outer(a0, ai, rules);
    out.push_back(with_digits(label, mod(a0 + p.d0_first, 4), i, mod(ai + p.di_first, 4)));
    out.push_back(with_digits(label, mod(a0 + p.d0_second, 4), i, mod(ai + p.di_second, 4)));
  }
  return out;
}

struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
};

Adjacency compress(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Adjacency adj;
  adj.offsets.assign(node_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++adj.offsets[u + 1];
    ++adj.offsets[v + 1];
  }
  std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
  adj.targets.resize(adj.offsets.back());
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    adj.targets[cursor[u]++] = v;
    adj.targets[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i]),
              adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[i + 1]));
  }
  return adj;
}

// Per-node rule emissions as node indices, in rule order.
std::vector<std::vector<NodeId>> emission_table(const TopologySpec& spec, BvhRules rules) {
  const auto count = static_cast<std::size_t>(spec.node_count());
  std::vector<std::vector<NodeId>> table(count);
  for (std::size_t u = 0; u < count; ++u) {
    const NodeLabel label = index_to_label(spec, static_cast<NodeId>(u));
    for (const NodeLabel& v : literal_emissions(spec, label, rules)) {
      table[u].push_back(label_to_index(spec, v));
    }
  }
  return table;
}

Graph closure_graph(const TopologySpec& spec, const std::vector<std::vector<NodeId>>& table) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t u = 0; u < table.size(); ++u) {
    for (NodeId v : table[u]) edges.emplace_back(static_cast<NodeId>(u), v);
  }
  return Graph::from_edges(table.size(), edges, spec);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::HC: return "HC";
    case Family::VQ: return "VQ";
    case Family::BH: return "BH";
    case Family::BVH: return "BVH";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "hc") return Family::HC;
  if (lower == "vq") return Family::VQ;
  if (lower == "bh") return Family::BH;
  if (lower == "bvh") return Family::BVH;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

TopologySpec::TopologySpec(Family family_, int dimension_) : family(family_), dimension(dimension_) {
  if (dimension < 1) throw std::invalid_argument("dimension must be at least 1");
  const int bits = radix() == 2 ? dimension : 2 * dimension;
  if (bits > 62) throw std::invalid_argument("dimension too large");
}

std::uint64_t TopologySpec::node_count() const {
  return std::uint64_t{1} << (radix() == 2 ? dimension : 2 * dimension);
}

int TopologySpec::expected_degree() const { return radix() == 2 ? dimension : 2 * dimension; }

std::string NodeLabel::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

NodeLabel NodeLabel::parse(std::string_view text) {
  NodeLabel label;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view piece =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int digit = 0;
    const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), digit);
    if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size()) {
      throw MalformedLabelError("cannot parse label '" + std::string(text) + "'");
    }
    label.digits.push_back(digit);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return label;
}

void validate_label(const TopologySpec& spec, const NodeLabel& label) {
  if (label.digits.size() != static_cast<std::size_t>(spec.dimension)) {
    throw MalformedLabelError("label '" + label.to_string() + "' has " +
                              std::to_string(label.digits.size()) + " digits, expected " +
                              std::to_string(spec.dimension));
  }
  for (int d : label.digits) {
    if (d < 0 || d >= spec.radix()) {
      throw MalformedLabelError("label '" + label.to_string() + "' has a digit outside [0, " +
                                std::to_string(spec.radix()) + ")");
    }
  }
}

NodeId label_to_index(const TopologySpec& spec, const NodeLabel& label) {
  validate_label(spec, label);
  std::uint64_t index = 0;
  for (int d : label.digits) index = index * static_cast<std::uint64_t>(spec.radix()) + d;
  return static_cast<NodeId>(index);
}

NodeLabel index_to_label(const TopologySpec& spec, NodeId index) {
  NodeLabel label;
  label.digits.assign(static_cast<std::size_t>(spec.dimension), 0);
  std::uint64_t rest = index;
  for (auto it = label.digits.rbegin(); it != label.digits.rend(); ++it) {
    *it = static_cast<int>(rest % static_cast<std::uint64_t>(spec.radix()));
    rest /= static_cast<std::uint64_t>(spec.radix());
  }
  return label;
}

std::vector<NodeLabel> literal_emissions(const TopologySpec& spec, const NodeLabel& label,
                                         BvhRules rules) {
  validate_label(spec, label);
  switch (spec.family) {
    case Family::HC: return hc_emissions(label);
    case Family::VQ: return vq_emissions(label);
    case Family::BH: return bh_emissions(label);
    case Family::BVH: return bvh_emissions(label, rules);
  }
  return {};
}

std::vector<NodeLabel> hc_neighbors(const TopologySpec& spec, const NodeLabel& label) {
  require_family(spec, Family::HC);
  return sorted_unique(literal_emissions(spec, label));
}

std::vector<NodeLabel> vq_neighbors(const TopologySpec& spec, const NodeLabel& label) {
  require_family(spec, Family::VQ);
  return sorted_unique(literal_emissions(spec, label));
}

std::vector<NodeLabel> bh_neighbors(const TopologySpec& spec, const NodeLabel& label) {
  require_family(spec, Family::BH);
  return sorted_unique(literal_emissions(spec, label));
}

std::vector<NodeLabel> bvh_neighbors(const TopologySpec& spec, const NodeLabel& label,
                                     BvhRules rules) {
  require_family(spec, Family::BVH);
  return sorted_unique(literal_emissions(spec, label, rules));
}

std::vector<NodeLabel> family_neighbors(const TopologySpec& spec, const NodeLabel& label,
                                        BvhRules rules) {
  return sorted_unique(literal_emissions(spec, label, rules));
}

Graph Graph::from_edges(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges,
                        std::optional<TopologySpec> spec) {
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
  }
  if (spec && spec->node_count() != node_count) {
    throw std::invalid_argument("node count does not match spec");
  }
  Adjacency adj = compress(node_count, {edges.begin(), edges.end()});
  Graph g;
  g.spec_ = spec;
  g.offsets_ = std::move(adj.offsets);
  g.targets_ = std::move(adj.targets);
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId node) const {
  if (!contains(node)) throw std::out_of_range("node " + std::to_string(node) + " not in graph");
  return {targets_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
}

int Graph::min_degree() const {
  int best = node_count() == 0 ? 0 : degree(0);
  for (NodeId u = 1; u < node_count(); ++u) best = std::min(best, degree(u));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (NodeId u = 0; u < node_count(); ++u) best = std::max(best, degree(u));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

NodeLabel Graph::label(NodeId node) const {
  if (!contains(node)) throw std::out_of_range("node " + std::to_string(node) + " not in graph");
  if (spec_) return index_to_label(*spec_, node);
  return NodeLabel{{static_cast<int>(node)}};
}

NodeId Graph::id_of(const NodeLabel& label) const {
  if (spec_) return label_to_index(*spec_, label);
  if (label.digits.size() != 1 || label.digits[0] < 0 ||
      static_cast<std::size_t>(label.digits[0]) >= node_count()) {
    throw MalformedLabelError("label '" + label.to_string() + "' not in graph");
  }
  return static_cast<NodeId>(label.digits[0]);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& graph) {
  std::vector<bool> seen(graph.node_count(), false);
  std::vector<std::vector<NodeId>> components;
  for (NodeId start = 0; start < graph.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> members{start};
    seen[start] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (NodeId v : graph.neighbors(members[head])) {
        if (!seen[v]) {
          seen[v] = true;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

Graph build_graph(const TopologySpec& spec, BvhRules rules) {
  if (spec.node_count() > kMaxBuildNodes) {
    throw std::length_error(std::string(to_string(spec.family)) + "_" +
                            std::to_string(spec.dimension) + " exceeds the node cap");
  }
  Graph graph = closure_graph(spec, emission_table(spec, rules));
  auto components = connected_components(graph);
  if (components.size() != 1) {
    throw ConstructionError(std::string(to_string(spec.family)) + "_" +
                                std::to_string(spec.dimension) + " is disconnected (" +
                                std::to_string(components.size()) + " components)",
                            std::move(components));
  }
  return graph;
}

std::size_t AdjacencyAuditReport::nodes_with_partner() const {
  return static_cast<std::size_t>(std::count_if(matching_partners.begin(), matching_partners.end(),
                                                [](const auto& p) { return !p.empty(); }));
}

bool AdjacencyAuditReport::matching_pairs_complete() const {
  return std::all_of(matching_partners.begin(), matching_partners.end(),
                     [](const auto& p) { return p.size() == 1; });
}

AdjacencyAuditReport audit_graph(const TopologySpec& spec, BvhRules rules) {
  if (spec.node_count() > kMaxBuildNodes) {
    throw std::length_error("audit exceeds the node cap");
  }
  auto table = emission_table(spec, rules);
  const Graph graph = closure_graph(spec, table);

  AdjacencyAuditReport report;
  report.spec = spec;
  report.rules = rules;
  report.expected_degree = spec.expected_degree();
  report.degree.resize(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    report.degree[u] = graph.degree(u);
    if (report.degree[u] != report.expected_degree) report.degree_violations.push_back(u);
  }

  for (auto& row : table) {
    const std::size_t raw = row.size();
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    report.duplicate_emissions += raw - row.size();
  }
  for (NodeId u = 0; u < table.size(); ++u) {
    for (NodeId v : table[u]) {
      if (!std::binary_search(table[v].begin(), table[v].end(), u)) {
        report.one_directional.emplace_back(u, v);
      }
    }
  }

  std::map<std::vector<NodeId>, std::vector<NodeId>> by_neighbourhood;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto nbrs = graph.neighbors(u);
    by_neighbourhood[{nbrs.begin(), nbrs.end()}].push_back(u);
  }
  report.matching_partners.resize(graph.node_count());
  for (const auto& [nbrs, group] : by_neighbourhood) {
    for (NodeId u : group) {
      for (NodeId w : group) {
        if (w != u) report.matching_partners[u].push_back(w);
      }
    }
  }
  return report;
}

}  // namespace bvhnet
