#pragma once

#include <array>
#include <string_view>

#include "bvhnet/paths.hpp"

// Published values the tables are diffed against, kept as constants so no
// comparison depends on external files.
namespace bvhnet::reference {

inline constexpr std::array<double, 3> kRhoGrid{0.1, 0.2, 0.3};

struct AverageDistanceRow {
  int n;
  double hc;
  double bh;
  double bvh;
};

// Mean distance from the origin, n = 1..6.
inline constexpr std::array<AverageDistanceRow, 6> kAverageDistance{{
    {1, 1.0, 1.0, 1.0},
    {2, 1.0, 2.25, 1.93},
    {3, 1.5, 3.156, 2.83},
    {4, 2.0, 4.14, 3.82},
    {5, 2.5, 5.12, 4.81},
    {6, 3.0, 6.11, 5.79},
}};

// BVH cost-effectiveness factor; rows n = 1..6, columns follow kRhoGrid.
// Printed to three (truncated) decimals.
inline constexpr std::array<std::array<double, 3>, 6> kCef{{
    {0.909, 0.833, 0.769},
    {0.833, 0.714, 0.625},
    {0.769, 0.625, 0.526},
    {0.714, 0.555, 0.454},
    {0.666, 0.500, 0.400},
    {0.625, 0.454, 0.357},
}};

// BVH time-cost-effectiveness factor, same layout.
inline constexpr std::array<std::array<double, 3>, 6> kTcef{{
    {1.48148, 1.37931, 1.29032},
    {1.58415, 1.36752, 1.20300},
    {1.52019, 1.23791, 1.04404},
    {1.42459, 1.1087, 0.90748},
    {1.33246, 0.9995, 0.79968},
    {1.249809, 0.90899, 0.71422},
}};

inline constexpr double kTableAverageTolerance = 0.07;
inline constexpr double kCefTolerance = 0.001;
inline constexpr double kTcefTolerance = 0.0001;
inline constexpr double kReliabilityTolerance = 0.0001;

// Worked terminal-reliability examples at r_link = 0.9, r_proc = 0.8.
inline constexpr double kBvh2Reliability = 0.8745;  // (0,0) -> (3,3)
inline constexpr double kBvh3Reliability = 0.9059;  // (0,0,0) -> (3,3,0)

inline constexpr std::string_view kBvh2Source = "0,0";
inline constexpr std::string_view kBvh2Target = "3,3";
inline constexpr std::string_view kBvh3Source = "0,0,0";
inline constexpr std::string_view kBvh3Target = "3,3,0";

/// Two 3-link paths and two 4-link paths.
inline PathClassSet bvh2_classes() { return PathClassSet::from_classes({{2, 3, 2}, {2, 4, 3}}); }
/// Four 5-link paths and two 3-link paths.
inline PathClassSet bvh3_classes() { return PathClassSet::from_classes({{4, 5, 4}, {2, 3, 2}}); }

// Hand-listed disjoint paths, labels separated by spaces.
inline constexpr std::array<std::string_view, 2> kBvh1Paths{"0 1 3", "0 2 3"};
inline constexpr std::array<std::string_view, 4> kBvh2Paths{
    "0,0 1,1 2,3 3,3",
    "0,0 1,0 2,2 3,3",
    "0,0 3,1 2,1 3,3",
    "0,0 2,0 1,2 0,2 3,3",
};

}  // namespace bvhnet::reference
