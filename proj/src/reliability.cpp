#include "bvhnet/reliability.hpp"

#include <cmath>
#include <stdexcept>

namespace bvhnet {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error(std::string(name) + " must lie in [0, 1]");
}

void require_nonnegative(double x, const char* name) {
  if (!(x >= 0.0)) throw std::domain_error(std::string(name) + " must be non-negative");
}

}  // namespace

void ReliabilityParams::validate() const {
  require_probability(r_link, "r_link");
  require_probability(r_proc, "r_proc");
  require_nonnegative(lambda_link, "lambda_link");
  require_nonnegative(lambda_proc, "lambda_proc");
  require_nonnegative(t, "t");
}

double component_reliability(double lambda, double t) {
  require_nonnegative(lambda, "lambda");
  require_nonnegative(t, "t");
  return std::exp(-lambda * t);
}

double terminal_reliability(const PathClassSet& classes, double r_link, double r_proc) {
  if (classes.empty()) throw std::domain_error("terminal reliability needs at least one path");
  require_probability(r_link, "r_link");
  require_probability(r_proc, "r_proc");
  double all_fail = 1.0;
  for (const PathClass& c : classes.classes()) {
    const double path_ok = std::pow(r_link, c.links) * std::pow(r_proc, c.intermediates);
    all_fail *= std::pow(1.0 - path_ok, c.count);
  }
  return 1.0 - all_fail;
}

std::vector<CurvePoint> terminal_reliability_curve(const PathClassSet& classes, double lambda_link,
                                                   double lambda_proc, std::span<const double> times) {
  if (times.empty()) throw std::domain_error("time grid is empty");
  std::vector<CurvePoint> curve;
  curve.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && times[i] < times[i - 1]) throw std::domain_error("time grid must be non-decreasing");
    const double t = times[i];
    curve.push_back({t, terminal_reliability(classes, component_reliability(lambda_link, t),
                                             component_reliability(lambda_proc, t))});
  }
  return curve;
}

DerivedReliability derive_and_evaluate(const Graph& graph, NodeId s, NodeId t,
                                       const ReliabilityParams& params) {
  params.validate();
  DerivedReliability out;
  out.paths = max_disjoint_paths(graph, s, t);
  out.classes = classify_paths(out.paths);
  out.reliability = terminal_reliability(out.classes, params.r_link, params.r_proc);
  return out;
}

}  // namespace bvhnet
