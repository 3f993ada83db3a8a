#include <gtest/gtest.h>

#include <cmath>

#include "bvhnet/metrics.hpp"
#include "support.hpp"

using namespace bvhnet;
using bvhnet::testkit::floyd_warshall;
using bvhnet::testkit::make;
using bvhnet::testkit::node;

TEST(Ratio, Reduces) {
  EXPECT_EQ(Ratio::of(6, 4), (Ratio{3, 2}));
  EXPECT_EQ(Ratio::of(0, 7), (Ratio{0, 1}));
  EXPECT_EQ(Ratio::of(2, 3) * Ratio::of(3, 4), (Ratio{1, 2}));
  EXPECT_EQ(Ratio::of(29, 16).to_string(), "29/16");
  EXPECT_ANY_THROW(Ratio::of(1, 0));
}

TEST(Bfs, Examples) {
  const Graph bvh1 = make(Family::BVH, 1);
  EXPECT_EQ(bfs_distances(bvh1, 0), (std::vector<int>{0, 1, 1, 2}));
  const Graph hc3 = make(Family::HC, 3);
  EXPECT_EQ(bfs_distances(hc3, node(hc3, "0,0,0"))[node(hc3, "1,1,1")], 3);
  const Graph bvh2 = make(Family::BVH, 2);
  EXPECT_EQ(bfs_distances(bvh2, node(bvh2, "0,0"))[node(bvh2, "3,3")], 3);
  EXPECT_THROW(bfs_distances(bvh2, 16), std::out_of_range);
}

TEST(Bfs, UnreachableIsMinusOne) {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
  EXPECT_EQ(bfs_distances(Graph::from_edges(3, edges), 0), (std::vector<int>{0, 1, -1}));
}

TEST(Bfs, MatchesFloydWarshall) {
  for (Family f : {Family::HC, Family::VQ, Family::BH, Family::BVH}) {
    const Graph g = make(f, f == Family::HC || f == Family::VQ ? 5 : 2);
    const auto oracle = floyd_warshall(g);
    for (NodeId s = 0; s < g.node_count(); ++s) EXPECT_EQ(bfs_distances(g, s), oracle[s]) << to_string(f);
  }
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const Graph g = testkit::random_graph(12, 0.2, seed);
    const auto oracle = floyd_warshall(g);
    for (NodeId s = 0; s < g.node_count(); ++s) EXPECT_EQ(bfs_distances(g, s), oracle[s]);
  }
}

TEST(Diameter, Bvh) {
  EXPECT_EQ(diameter(make(Family::BVH, 1)), 2);
  EXPECT_EQ(diameter(make(Family::BVH, 2)), 3);
}

TEST(Diameter, HypercubeEqualsDimension) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(diameter(make(Family::HC, n)), n);
}

TEST(Diameter, DisconnectedThrows) {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
  EXPECT_ANY_THROW(diameter(Graph::from_edges(3, edges)));
}

TEST(Profile, ThreadCountDoesNotMatter) {
  const Graph g = make(Family::BVH, 3);
  const DistanceProfile one = distance_profile(g, 1);
  const DistanceProfile many = distance_profile(g, 7);
  EXPECT_EQ(one.distance_sums, many.distance_sums);
  EXPECT_EQ(one.eccentricities, many.eccentricities);
  EXPECT_EQ(one.total_distance, many.total_distance);
}

TEST(Profile, MatchesFloydWarshall) {
  const Graph g = make(Family::BVH, 2);
  const auto oracle = floyd_warshall(g);
  const DistanceProfile p = distance_profile(g);
  std::uint64_t total = 0;
  int diam = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    std::uint64_t sum = 0;
    for (int d : oracle[s]) {
      sum += static_cast<std::uint64_t>(d);
      diam = std::max(diam, d);
    }
    EXPECT_EQ(p.distance_sums[s], sum);
    total += sum;
  }
  EXPECT_EQ(p.total_distance, total);
  EXPECT_EQ(p.diameter, diam);
}

TEST(Average, Examples) {
  EXPECT_EQ(average_distance(make(Family::BVH, 1), AverageMode::FromOrigin), Ratio::of(1, 1));
  EXPECT_EQ(average_distance(make(Family::HC, 2), AverageMode::AllPairs), Ratio::of(4, 3));
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(average_distance(make(Family::HC, n), AverageMode::FromOrigin), Ratio::of(n, 2));
  }
}

TEST(Average, BvhExactValues) {
  // Pinned from BFS; see the table diff for the comparison with published values.
  EXPECT_EQ(average_distance(make(Family::BVH, 2), AverageMode::FromOrigin), Ratio::of(29, 16));
  EXPECT_EQ(average_distance(make(Family::BVH, 3), AverageMode::FromOrigin), Ratio::of(170, 64));
}

TEST(Average, UniformProfileRescales) {
  // With every node seeing the same distance multiset, the origin mean over
  // |V| (self included) equals the all-pairs mean scaled by (|V|-1)/|V|.
  for (Family f : {Family::HC, Family::VQ, Family::BH, Family::BVH}) {
    const Graph g = make(f, 3);
    if (!distance_profile(g).uniform_distance_profile) continue;
    const auto v = static_cast<std::uint64_t>(g.node_count());
    EXPECT_EQ(average_distance(g, AverageMode::FromOrigin),
              average_distance(g, AverageMode::AllPairs) * Ratio::of(v - 1, v))
        << to_string(f);
  }
  EXPECT_TRUE(distance_profile(make(Family::HC, 4)).uniform_distance_profile);
  EXPECT_TRUE(distance_profile(make(Family::BH, 3)).uniform_distance_profile);
  EXPECT_TRUE(distance_profile(make(Family::BVH, 1)).uniform_distance_profile);
  // BVH_2 and BVH_3 have nodes with different distance multisets, so they
  // are not vertex-transitive.
  EXPECT_FALSE(distance_profile(make(Family::BVH, 2)).uniform_distance_profile);
  EXPECT_FALSE(distance_profile(make(Family::BVH, 3)).uniform_distance_profile);
}

TEST(TrafficDensity, Examples) {
  EXPECT_EQ(traffic_density(make(Family::BVH, 1)), Ratio::of(1, 1));
  // For BVH, |V|/|E| = 1/n, so density is the mean distance over n.
  for (int n = 1; n <= 3; ++n) {
    const Graph g = make(Family::BVH, n);
    EXPECT_EQ(traffic_density(g),
              average_distance(g, AverageMode::FromOrigin) * Ratio::of(1, static_cast<std::uint64_t>(n)));
  }
}

TEST(Cost, Examples) {
  EXPECT_EQ(cost(make(Family::BVH, 2)), 12);
  EXPECT_EQ(cost(make(Family::HC, 3)), 9);
  EXPECT_EQ(cost(make(Family::BVH, 1)), 4);
  const Graph bvh3 = make(Family::BVH, 3);
  EXPECT_EQ(cost(bvh3), bvh3.max_degree() * diameter(bvh3));
}

TEST(Cef, Examples) {
  EXPECT_NEAR(cef(1, 0.1), 0.909, 0.001);
  EXPECT_NEAR(cef(3, 0.2), 0.625, 0.001);
  EXPECT_NEAR(cef(6, 0.3), 0.357, 0.001);
  EXPECT_THROW(cef(1, 0.0), std::domain_error);
  EXPECT_THROW(cef(1, -0.1), std::domain_error);
  EXPECT_THROW(cef(0, 0.1), std::domain_error);
}

TEST(Tcef, Examples) {
  EXPECT_NEAR(tcef(1, 0.1), 2.0 / 1.35, 1e-12);
  EXPECT_NEAR(tcef(1, 0.1), 1.48148, 0.0001);
  EXPECT_NEAR(tcef(2, 0.1), 1.58415, 0.0001);
  EXPECT_NEAR(tcef(6, 0.3), 0.71422, 0.0001);
  EXPECT_THROW(tcef(2, 0.0), std::domain_error);
}

TEST(Cef, DecreasingInBothArguments) {
  for (int n = 1; n < 10; ++n) {
    for (double rho : {0.05, 0.1, 0.5, 1.0}) {
      EXPECT_GT(cef(n, rho), cef(n + 1, rho));
      EXPECT_GT(cef(n, rho), cef(n, rho * 1.5));
      EXPECT_GT(tcef(n, rho), tcef(n, rho * 1.5));
      EXPECT_GT(cef(n, rho), 0.0);
      EXPECT_LT(cef(n, rho), 1.0);
    }
  }
}

TEST(ClosedForm, Bvh) {
  const ClosedForm four = closed_form_report(TopologySpec(Family::BVH, 4));
  EXPECT_EQ(four.nodes, 256u);
  EXPECT_EQ(four.edges, 1024u);
  EXPECT_EQ(four.degree, 8);
  EXPECT_EQ(four.diameter, 6);
  EXPECT_EQ(four.cost, 48);
  const ClosedForm one = closed_form_report(TopologySpec(Family::BVH, 1));
  EXPECT_EQ(one.nodes, 4u);
  EXPECT_EQ(one.edges, 4u);
  EXPECT_EQ(one.degree, 2);
  EXPECT_EQ(one.diameter, 2);
  EXPECT_EQ(one.cost, 4);
}

TEST(ClosedForm, Hypercube) {
  const ClosedForm six = closed_form_report(TopologySpec(Family::HC, 6));
  EXPECT_EQ(six.nodes, 64u);
  EXPECT_EQ(six.degree, 6);
  EXPECT_EQ(six.diameter, 6);
  EXPECT_EQ(six.avg_distance_from_origin, Ratio::of(3, 1));
}

TEST(ClosedForm, AbsentForVqAndBh) {
  for (Family f : {Family::VQ, Family::BH}) {
    const ClosedForm cf = closed_form_report(TopologySpec(f, 3));
    EXPECT_TRUE(cf.degree.has_value());
    EXPECT_TRUE(cf.nodes.has_value());
    EXPECT_FALSE(cf.diameter.has_value());
    EXPECT_FALSE(cf.cost.has_value());
  }
}

TEST(Report, AgreementAndDeviations) {
  const MetricsReport hc = compute_metrics(make(Family::HC, 4));
  EXPECT_TRUE(hc.deviations.empty());
  EXPECT_EQ(hc.agreement.diameter, true);
  EXPECT_EQ(hc.agreement.avg_distance_from_origin, true);

  const MetricsReport bvh2 = compute_metrics(make(Family::BVH, 2));
  EXPECT_EQ(bvh2.agreement.diameter, true);
  EXPECT_EQ(bvh2.measured.cost, 12);

  // The closed-form diameter n + floor(n/2) and BFS disagree from n = 3 on;
  // the report records the gap instead of failing.
  const MetricsReport bvh3 = compute_metrics(make(Family::BVH, 3));
  EXPECT_EQ(bvh3.measured.diameter, 5);
  EXPECT_EQ(bvh3.closed_form.diameter, 4);
  EXPECT_EQ(bvh3.agreement.diameter, false);
  EXPECT_FALSE(bvh3.deviations.empty());
}
