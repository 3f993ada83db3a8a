#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvhnet/topology.hpp"

namespace bvhnet {

/// Non-negative rational kept in lowest terms.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio of(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio operator*(const Ratio& a, const Ratio& b);

/// Hop distances from `source` to every node; -1 for unreachable nodes.
/// Throws std::out_of_range for an unknown source.
std::vector<int> bfs_distances(const Graph& graph, NodeId source);

int eccentricity(const Graph& graph, NodeId source);

/// Everything derivable from one BFS per source.
struct DistanceProfile {
  int diameter = 0;
  /// Sum of d(u, v) over all ordered pairs.
  std::uint64_t total_distance = 0;
  /// d(u, *) summed, per source.
  std::vector<std::uint64_t> distance_sums;
  std::vector<int> eccentricities;
  /// Every source sees the same multiset of distances as node 0. A necessary
  /// condition for vertex transitivity, reported rather than assumed.
  bool uniform_distance_profile = true;
};

/// All-pairs BFS. Sources are split across `threads` workers (0 picks the
/// hardware concurrency); results do not depend on the split.
DistanceProfile distance_profile(const Graph& graph, unsigned threads = 0);

int diameter(const Graph& graph);

enum class AverageMode {
  /// Mean distance from node 0 (the all-zeros label) over all |V| nodes,
  /// self-distance included.
  FromOrigin,
  /// Mean over ordered pairs u != v.
  AllPairs,
};

Ratio average_distance(const Graph& graph, AverageMode mode);

/// avg_distance(FromOrigin) * |V| / |E|.
Ratio traffic_density(const Graph& graph);

/// max degree * diameter.
int cost(const Graph& graph);

/// 1 / (1 + rho n). Throws std::domain_error for rho <= 0 or n < 1.
double cef(int n, double rho);

/// 2 / (1 + rho n + 2^(-2n)), the sigma = 1 instance of the time-cost
/// effectiveness factor. Same domain as cef().
double tcef(int n, double rho);

struct ClosedForm {
  std::optional<int> degree;
  std::optional<std::uint64_t> nodes;
  std::optional<std::uint64_t> edges;
  std::optional<int> diameter;
  std::optional<int> cost;
  std::optional<Ratio> avg_distance_from_origin;
};

/// Closed forms for HC and BVH; VQ and BH only get degree and counts.
ClosedForm closed_form_report(const TopologySpec& spec);

struct MeasuredMetrics {
  int degree_min = 0;
  int degree_max = 0;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  int diameter = 0;
  Ratio avg_distance_from_origin;
  Ratio avg_distance_all_pairs;
  Ratio traffic_density;
  int cost = 0;
  bool uniform_distance_profile = false;
};

struct Agreement {
  std::optional<bool> degree;
  std::optional<bool> nodes;
  std::optional<bool> edges;
  std::optional<bool> diameter;
  std::optional<bool> cost;
  std::optional<bool> avg_distance_from_origin;
};

struct MetricsReport {
  TopologySpec spec{Family::HC, 1};
  MeasuredMetrics measured;
  ClosedForm closed_form;
  Agreement agreement;
  /// One line per closed form the measurement contradicts.
  std::vector<std::string> deviations;
};

/// Measures a family graph and compares with closed_form_report(). Throws
/// std::invalid_argument for graphs without a spec.
MetricsReport compute_metrics(const Graph& graph, unsigned threads = 0);

}  // namespace bvhnet
