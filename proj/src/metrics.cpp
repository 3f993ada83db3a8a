#include "bvhnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace bvhnet {

namespace {

std::vector<int> distance_histogram(const std::vector<int>& dist) {
  std::vector<int> hist;
  for (int d : dist) {
    if (d < 0) continue;
    if (static_cast<std::size_t>(d) >= hist.size()) hist.resize(static_cast<std::size_t>(d) + 1, 0);
    ++hist[static_cast<std::size_t>(d)];
  }
  return hist;
}

void require_rho(int n, double rho) {
  if (n < 1) throw std::domain_error("dimension must be at least 1");
  if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
}

}  // namespace

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  const Ratio x = Ratio::of(a.num, b.den);
  const Ratio y = Ratio::of(b.num, a.den);
  return Ratio::of(x.num * y.num, x.den * y.den);
}

std::vector<int> bfs_distances(const Graph& graph, NodeId source) {
  if (!graph.contains(source)) {
    throw std::out_of_range("source " + std::to_string(source) + " not in graph");
  }
  std::vector<int> dist(graph.node_count(), -1);
  std::vector<NodeId> queue;
  queue.reserve(graph.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : graph.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int eccentricity(const Graph& graph, NodeId source) {
  const auto dist = bfs_distances(graph, source);
  return *std::max_element(dist.begin(), dist.end());
}

DistanceProfile distance_profile(const Graph& graph, unsigned threads) {
  const std::size_t count = graph.node_count();
  DistanceProfile profile;
  profile.distance_sums.assign(count, 0);
  profile.eccentricities.assign(count, 0);
  if (count == 0) return profile;

  const std::vector<int> reference = distance_histogram(bfs_distances(graph, 0));
  std::vector<char> uniform(count, 1);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t s = first; s < last; ++s) {
      const auto dist = bfs_distances(graph, static_cast<NodeId>(s));
      std::uint64_t sum = 0;
      int ecc = 0;
      for (int d : dist) {
        if (d < 0) throw std::invalid_argument("graph is disconnected");
        sum += static_cast<std::uint64_t>(d);
        ecc = std::max(ecc, d);
      }
      profile.distance_sums[s] = sum;
      profile.eccentricities[s] = ecc;
      uniform[s] = distance_histogram(dist) == reference;
    }
  };

  if (threads <= 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t first = t * chunk;
      const std::size_t last = std::min(count, first + chunk);
      pool.emplace_back([&, t, first, last] {
        try {
          work(first, last);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  profile.total_distance =
      std::accumulate(profile.distance_sums.begin(), profile.distance_sums.end(), std::uint64_t{0});
  profile.diameter = *std::max_element(profile.eccentricities.begin(), profile.eccentricities.end());
  profile.uniform_distance_profile = std::all_of(uniform.begin(), uniform.end(), [](char c) { return c != 0; });
  return profile;
}

int diameter(const Graph& graph) { return distance_profile(graph).diameter; }

Ratio average_distance(const Graph& graph, AverageMode mode) {
  const std::uint64_t count = graph.node_count();
  if (mode == AverageMode::FromOrigin) {
    const auto dist = bfs_distances(graph, 0);
    std::uint64_t sum = 0;
    for (int d : dist) {
      if (d < 0) throw std::invalid_argument("graph is disconnected");
      sum += static_cast<std::uint64_t>(d);
    }
    return Ratio::of(sum, count);
  }
  if (count < 2) throw std::domain_error("all-pairs average needs at least two nodes");
  return Ratio::of(distance_profile(graph).total_distance, count * (count - 1));
}

Ratio traffic_density(const Graph& graph) {
  if (graph.edge_count() == 0) throw std::domain_error("graph has no edges");
  return average_distance(graph, AverageMode::FromOrigin) *
         Ratio::of(graph.node_count(), graph.edge_count());
}

int cost(const Graph& graph) { return graph.max_degree() * diameter(graph); }

double cef(int n, double rho) {
  require_rho(n, rho);
  return 1.0 / (1.0 + rho * n);
}

double tcef(int n, double rho) {
  require_rho(n, rho);
  return 2.0 / (1.0 + rho * n + std::ldexp(1.0, -2 * n));
}

ClosedForm closed_form_report(const TopologySpec& spec) {
  const int n = spec.dimension;
  ClosedForm cf;
  cf.degree = spec.expected_degree();
  cf.nodes = spec.node_count();
  cf.edges = spec.node_count() * static_cast<std::uint64_t>(*cf.degree) / 2;
  switch (spec.family) {
    case Family::HC:
      cf.diameter = n;
      cf.cost = n * n;
      cf.avg_distance_from_origin = Ratio::of(static_cast<std::uint64_t>(n), 2);
      break;
    case Family::BVH:
      cf.diameter = n == 1 ? 2 : n + n / 2;
      cf.cost = 2 * n * *cf.diameter;
      break;
    case Family::VQ:
    case Family::BH:
      break;
  }
  return cf;
}

MetricsReport compute_metrics(const Graph& graph, unsigned threads) {
  if (!graph.spec()) throw std::invalid_argument("metrics report needs a family graph");
  MetricsReport report;
  report.spec = *graph.spec();
  const DistanceProfile profile = distance_profile(graph, threads);

  MeasuredMetrics& m = report.measured;
  m.degree_min = graph.min_degree();
  m.degree_max = graph.max_degree();
  m.nodes = graph.node_count();
  m.edges = graph.edge_count();
  m.diameter = profile.diameter;
  m.avg_distance_from_origin = Ratio::of(profile.distance_sums[0], m.nodes);
  m.avg_distance_all_pairs = Ratio::of(profile.total_distance, m.nodes * (m.nodes - 1));
  m.traffic_density = Ratio::of(profile.distance_sums[0], m.edges);
  m.cost = m.degree_max * m.diameter;
  m.uniform_distance_profile = profile.uniform_distance_profile;

  report.closed_form = closed_form_report(report.spec);
  const ClosedForm& cf = report.closed_form;
  Agreement& a = report.agreement;
  auto note = [&](const char* field, const std::string& measured, const std::string& formula) {
    report.deviations.push_back(std::string(field) + ": measured " + measured +
                                ", closed form " + formula);
  };
  if (cf.degree) {
    a.degree = m.degree_min == *cf.degree && m.degree_max == *cf.degree;
    if (!*a.degree) note("degree", std::to_string(m.degree_min) + ".." + std::to_string(m.degree_max), std::to_string(*cf.degree));
  }
  if (cf.nodes) {
    a.nodes = m.nodes == *cf.nodes;
    if (!*a.nodes) note("nodes", std::to_string(m.nodes), std::to_string(*cf.nodes));
  }
  if (cf.edges) {
    a.edges = m.edges == *cf.edges;
    if (!*a.edges) note("edges", std::to_string(m.edges), std::to_string(*cf.edges));
  }
  if (cf.diameter) {
    a.diameter = m.diameter == *cf.diameter;
    if (!*a.diameter) note("diameter", std::to_string(m.diameter), std::to_string(*cf.diameter));
  }
  if (cf.cost) {
    a.cost = m.cost == *cf.cost;
    if (!*a.cost) note("cost", std::to_string(m.cost), std::to_string(*cf.cost));
  }
  if (cf.avg_distance_from_origin) {
    a.avg_distance_from_origin = m.avg_distance_from_origin == *cf.avg_distance_from_origin;
    if (!*a.avg_distance_from_origin) {
      note("avg_distance_from_origin", m.avg_distance_from_origin.to_string(),
           cf.avg_distance_from_origin->to_string());
    }
  }
  return report;
}

}  // namespace bvhnet
