#include <gtest/gtest.h>

#include <random>

#include "bvhnet/paths.hpp"
#include "bvhnet/reference.hpp"
#include "support.hpp"

using namespace bvhnet;
using bvhnet::testkit::brute_force_disjoint;
using bvhnet::testkit::make;
using bvhnet::testkit::node;
using bvhnet::testkit::parse_path;

TEST(DisjointPaths, BvhOneExample) {
  const Graph g = make(Family::BVH, 1);
  const DisjointPathSet set = max_disjoint_paths(g, 0, 3);
  ASSERT_EQ(set.paths.size(), 2u);
  EXPECT_EQ(set.paths[0], parse_path(g, reference::kBvh1Paths[0]));
  EXPECT_EQ(set.paths[1], parse_path(g, reference::kBvh1Paths[1]));
  EXPECT_TRUE(path_set_violations(g, set).empty());
}

TEST(DisjointPaths, BvhTwoExample) {
  const Graph g = make(Family::BVH, 2);
  const DisjointPathSet set = max_disjoint_paths(g, node(g, "0,0"), node(g, "3,3"));
  EXPECT_EQ(set.paths.size(), 4u);
  EXPECT_TRUE(path_set_violations(g, set).empty());
}

TEST(DisjointPaths, HypercubeExample) {
  const Graph g = make(Family::HC, 3);
  EXPECT_EQ(max_disjoint_paths(g, node(g, "0,0,0"), node(g, "1,1,1")).paths.size(), 3u);
}

TEST(DisjointPaths, Errors) {
  const Graph g = make(Family::BVH, 1);
  EXPECT_THROW(max_disjoint_paths(g, 2, 2), std::domain_error);
  EXPECT_THROW(max_disjoint_paths(g, 0, 4), std::out_of_range);
}

TEST(DisjointPaths, AdjacentEndpointsCountDirectEdge) {
  const Graph g = make(Family::BVH, 1);
  const DisjointPathSet set = max_disjoint_paths(g, 0, 1);
  EXPECT_EQ(set.paths.size(), 2u);
  EXPECT_TRUE(path_set_violations(g, set).empty());
}

TEST(DisjointPaths, DisconnectedGivesNone) {
  const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {2, 3}};
  const Graph g = Graph::from_edges(4, edges);
  EXPECT_TRUE(max_disjoint_paths(g, 0, 3).paths.empty());
}

TEST(DisjointPaths, MatchesBruteForceOnBvhOne) {
  const Graph g = make(Family::BVH, 1);
  for (NodeId s = 0; s < 4; ++s)
    for (NodeId t = 0; t < 4; ++t)
      if (s != t) EXPECT_EQ(static_cast<int>(max_disjoint_paths(g, s, t).paths.size()), brute_force_disjoint(g, s, t));
}

TEST(DisjointPaths, MatchesBruteForceOnRandomGraphs) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const Graph g = testkit::random_graph(8, 0.45, seed);
    for (NodeId s = 0; s < 8; ++s) {
      for (NodeId t = s + 1; t < 8; ++t) {
        const DisjointPathSet set = max_disjoint_paths(g, s, t);
        EXPECT_EQ(static_cast<int>(set.paths.size()), brute_force_disjoint(g, s, t)) << "seed " << seed;
        EXPECT_TRUE(path_set_violations(g, set).empty());
      }
    }
  }
}

TEST(DisjointPaths, MengerOnBvh) {
  for (int n = 1; n <= 2; ++n) {
    const Graph g = make(Family::BVH, n);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      for (NodeId t = 0; t < g.node_count(); ++t) {
        if (s == t) continue;
        const DisjointPathSet set = max_disjoint_paths(g, s, t);
        EXPECT_EQ(set.paths.size(), static_cast<std::size_t>(2 * n));
        EXPECT_TRUE(path_set_violations(g, set).empty());
      }
    }
  }
}

TEST(DisjointPaths, Deterministic) {
  const Graph g = make(Family::BVH, 3);
  const NodeId s = node(g, "0,0,0");
  const NodeId t = node(g, "3,3,0");
  EXPECT_EQ(max_disjoint_paths(g, s, t).paths, max_disjoint_paths(g, s, t).paths);
}

TEST(Connectivity, Families) {
  EXPECT_EQ(vertex_connectivity(make(Family::BVH, 1)), 2);
  EXPECT_EQ(vertex_connectivity(make(Family::BVH, 2)), 4);
  EXPECT_EQ(vertex_connectivity(make(Family::HC, 4)), 4);
  EXPECT_EQ(vertex_connectivity(make(Family::BH, 2)), 4);
  EXPECT_EQ(vertex_connectivity(make(Family::VQ, 4)), 4);
}

TEST(Violations, Detected) {
  const Graph g = make(Family::BVH, 2);
  const NodeId s = node(g, "0,0");
  const NodeId t = node(g, "3,3");
  DisjointPathSet bad{s, t, {parse_path(g, "0,0 1,1 2,3 3,3"), parse_path(g, "0,0 1,1 2,3 3,3")}};
  EXPECT_FALSE(path_set_violations(g, bad).empty());
  DisjointPathSet wrong_end{s, t, {parse_path(g, "0,0 1,1 2,3")}};
  EXPECT_FALSE(path_set_violations(g, wrong_end).empty());
}

TEST(PublishedWitnesses, BvhTwo) {
  const Graph g = make(Family::BVH, 2);
  auto valid = [&](std::string_view text) {
    const Path p = parse_path(g, text);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
  };
  EXPECT_TRUE(valid(reference::kBvh2Paths[0]));
  EXPECT_TRUE(valid(reference::kBvh2Paths[1]));
  EXPECT_TRUE(valid(reference::kBvh2Paths[3]));
  // The third listed path steps (2,1) -> (3,3), which no rule produces.
  EXPECT_FALSE(valid(reference::kBvh2Paths[2]));
  EXPECT_FALSE(g.has_edge(node(g, "2,1"), node(g, "3,3")));
}

TEST(Classes, FromPaths) {
  const Graph g = make(Family::BVH, 1);
  EXPECT_EQ(classify_paths(max_disjoint_paths(g, 0, 3)), PathClassSet::from_classes({{2, 2, 1}}));

  const Graph g2 = make(Family::BVH, 2);
  DisjointPathSet listed{node(g2, "0,0"), node(g2, "3,3"), {}};
  for (auto text : reference::kBvh2Paths) listed.paths.push_back(parse_path(g2, text));
  EXPECT_EQ(classify_paths(listed), PathClassSet::from_classes({{3, 3, 2}, {1, 4, 3}}));
}

TEST(Classes, MergeAndRender) {
  const PathClassSet set = PathClassSet::from_classes({{1, 3, 2}, {2, 4, 3}, {1, 3, 2}});
  EXPECT_EQ(set, PathClassSet::from_classes({{2, 3, 2}, {2, 4, 3}}));
  EXPECT_EQ(set.total_paths(), 4);
  EXPECT_EQ(set.to_string(), "{(2,3,2),(2,4,3)}");
  EXPECT_TRUE(PathClassSet{}.empty());
}

TEST(Classes, Invalid) {
  EXPECT_ANY_THROW(PathClassSet::from_classes({{1, 3, 3}}));
  EXPECT_ANY_THROW(PathClassSet::from_classes({{0, 3, 2}}));
}

TEST(Classes, LinksAreIntermediatesPlusOne) {
  const Graph g = make(Family::BVH, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<NodeId> pick(0, 63);
  for (int i = 0; i < 30; ++i) {
    const NodeId s = pick(rng);
    const NodeId t = pick(rng);
    if (s == t) continue;
    const PathClassSet c = classify_paths(max_disjoint_paths(g, s, t));
    EXPECT_EQ(c.total_paths(), 6);
    for (const PathClass& k : c.classes()) EXPECT_EQ(k.links, k.intermediates + 1);
  }
}
