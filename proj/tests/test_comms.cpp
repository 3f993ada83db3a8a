#include <gtest/gtest.h>

#include <random>

#include "bvhnet/comms.hpp"
#include "bvhnet/metrics.hpp"
#include "support.hpp"

using namespace bvhnet;
using bvhnet::testkit::make;
using bvhnet::testkit::node;

TEST(Oracle, Examples) {
  const Graph g1 = make(Family::BVH, 1);
  EXPECT_EQ(route_oracle(g1, 0, 3).hops, (std::vector<NodeId>{0, 1, 3}));
  const Graph g2 = make(Family::BVH, 2);
  EXPECT_EQ(route_oracle(g2, node(g2, "0,0"), node(g2, "3,3")).length(), 3u);
  EXPECT_EQ(route_oracle(g2, 5, 5).hops, (std::vector<NodeId>{5}));
}

TEST(Oracle, ShortestOnEveryFamily) {
  for (Family f : {Family::HC, Family::VQ, Family::BH, Family::BVH}) {
    const Graph g = make(f, f == Family::HC || f == Family::VQ ? 4 : 2);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const auto dist = bfs_distances(g, u);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const RouteTrace trace = route_oracle(g, v, u);
        EXPECT_EQ(trace.length(), static_cast<std::size_t>(dist[v]));
        EXPECT_TRUE(trace_violations(g, trace).empty());
      }
    }
  }
}

TEST(Oracle, Unreachable) {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
  EXPECT_ANY_THROW(route_oracle(Graph::from_edges(3, edges), 0, 2));
}

TEST(Greedy, Examples) {
  const Graph g1 = make(Family::BVH, 1);
  EXPECT_EQ(route_greedy(g1, 0, 3).length(), 2u);
  const Graph g2 = make(Family::BVH, 2);
  EXPECT_LE(route_greedy(g2, node(g2, "0,0"), node(g2, "3,3")).length(), 3u);
  EXPECT_EQ(route_greedy(g2, 9, 9).length(), 0u);
}

TEST(Greedy, BvhOnly) {
  EXPECT_THROW(route_greedy(make(Family::HC, 3), 0, 7), UnsupportedFamilyError);
  EXPECT_THROW(route_greedy(make(Family::BH, 2), 0, 7), UnsupportedFamilyError);
}

TEST(Greedy, ReachesEveryTargetWithBoundedStretch) {
  for (int n = 1; n <= 3; ++n) {
    const Graph g = make(Family::BVH, n);
    const int diam = diameter(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const RouteTrace trace = route_greedy(g, u, v);
        ASSERT_FALSE(trace.hops.empty());
        EXPECT_EQ(trace.hops.front(), u);
        EXPECT_EQ(trace.hops.back(), v);
        EXPECT_LE(trace.length(), static_cast<std::size_t>(diam + 2));
        EXPECT_TRUE(trace_violations(g, trace).empty());
      }
    }
  }
}

TEST(Trace, ViolationsDetected) {
  const Graph g = make(Family::BVH, 1);
  RouteTrace jump{0, 3, {0, 3}, RoutePolicy::Oracle, false};
  EXPECT_FALSE(trace_violations(g, jump).empty());
  RouteTrace short_of{0, 3, {0, 1}, RoutePolicy::Oracle, false};
  EXPECT_FALSE(trace_violations(g, short_of).empty());
}

TEST(Broadcast, Rounds) {
  EXPECT_EQ(broadcast_schedule(make(Family::BVH, 1), 0).rounds.size(), 2u);
  const Graph g2 = make(Family::BVH, 2);
  EXPECT_EQ(broadcast_schedule(g2, node(g2, "0,0")).rounds.size(), 3u);
  const Graph hc3 = make(Family::HC, 3);
  EXPECT_EQ(broadcast_schedule(hc3, node(hc3, "0,0,0")).rounds.size(), 3u);
}

TEST(Broadcast, RoundsEqualEccentricity) {
  for (Family f : {Family::HC, Family::VQ, Family::BH, Family::BVH}) {
    const Graph g = make(f, 3);
    for (NodeId root = 0; root < g.node_count(); root += 5) {
      const BroadcastSchedule s = broadcast_schedule(g, root);
      EXPECT_EQ(s.rounds.size(), static_cast<std::size_t>(eccentricity(g, root)));
      EXPECT_TRUE(schedule_violations(g, s).empty());
    }
  }
}

TEST(Broadcast, CoverageAndSingleReception) {
  const Graph g = make(Family::BVH, 3);
  std::mt19937 rng(42);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.node_count() - 1));
  for (int i = 0; i < 50; ++i) {
    const NodeId root = pick(rng);
    const BroadcastSchedule s = broadcast_schedule(g, root);
    EXPECT_TRUE(schedule_violations(g, s).empty());
    std::vector<int> received(g.node_count(), 0);
    std::vector<bool> informed(g.node_count(), false);
    informed[root] = true;
    for (const auto& round : s.rounds) {
      std::vector<NodeId> fresh;
      for (const auto& [from, to] : round) {
        EXPECT_TRUE(informed[from]);
        EXPECT_TRUE(g.has_edge(from, to));
        ++received[to];
        fresh.push_back(to);
      }
      for (NodeId x : fresh) informed[x] = true;
    }
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_EQ(received[v], v == root ? 0 : 1);
  }
}

TEST(Broadcast, ViolationsDetected) {
  const Graph g = make(Family::BVH, 1);
  BroadcastSchedule twice{0, {{{0, 1}, {0, 2}}, {{1, 3}, {2, 3}}}};
  EXPECT_FALSE(schedule_violations(g, twice).empty());
  BroadcastSchedule missing{0, {{{0, 1}}}};
  EXPECT_FALSE(schedule_violations(g, missing).empty());
  BroadcastSchedule early{0, {{{0, 1}, {1, 3}}}};
  EXPECT_FALSE(schedule_violations(g, early).empty());
}
