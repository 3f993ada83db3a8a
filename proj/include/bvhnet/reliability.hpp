#pragma once

#include <span>
#include <vector>

#include "bvhnet/paths.hpp"
#include "bvhnet/topology.hpp"

namespace bvhnet {

struct ReliabilityParams {
  double r_link = 0.9;
  double r_proc = 0.8;
  /// Failures per hour.
  double lambda_link = 1e-4;
  double lambda_proc = 1e-3;
  /// Mission time in hours.
  double t = 0.0;

  /// Throws std::domain_error for probabilities outside [0, 1] or negative
  /// rates/time.
  void validate() const;
};

/// e^(-lambda t). Throws std::domain_error for negative inputs.
double component_reliability(double lambda, double t);

/// 1 - prod over classes of (1 - r_link^links * r_proc^intermediates)^count.
/// Endpoints are not charged a processor term. Throws std::domain_error for
/// an empty class set or probabilities outside [0, 1].
double terminal_reliability(const PathClassSet& classes, double r_link, double r_proc);

struct CurvePoint {
  double t = 0.0;
  double reliability = 0.0;
};

/// terminal_reliability() with r_link = e^(-lambda_link t) and
/// r_proc = e^(-lambda_proc t) at each time. `times` must be non-empty and
/// non-decreasing.
std::vector<CurvePoint> terminal_reliability_curve(const PathClassSet& classes, double lambda_link,
                                                   double lambda_proc, std::span<const double> times);

struct DerivedReliability {
  DisjointPathSet paths;
  PathClassSet classes;
  double reliability = 0.0;
};

/// max_disjoint_paths -> classify_paths -> terminal_reliability, using
/// params.r_link and params.r_proc.
DerivedReliability derive_and_evaluate(const Graph& graph, NodeId s, NodeId t,
                                       const ReliabilityParams& params);

}  // namespace bvhnet
