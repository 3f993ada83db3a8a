#include "bvhnet/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bvhnet/metrics.hpp"
#include "bvhnet/reference.hpp"
#include "bvhnet/reliability.hpp"

namespace bvhnet {

namespace {

constexpr double kExact = 1e-9;

std::string rho_name(double rho) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rho=%g", rho);
  return buf;
}

int published_rho_index(double rho) {
  for (std::size_t j = 0; j < reference::kRhoGrid.size(); ++j) {
    if (std::abs(reference::kRhoGrid[j] - rho) < 1e-12) return static_cast<int>(j);
  }
  return -1;
}

CellCheck check(std::string table, int n, std::string column, double ref, double value, double tol) {
  return {std::move(table), n, std::move(column), ref, value, tol, std::abs(value - ref) <= tol};
}

double origin_mean(Family family, int n) {
  return average_distance(build_graph(TopologySpec(family, n)), AverageMode::FromOrigin).value();
}

Table factor_table(std::string name, std::span<const double> rhos, int max_n, double (*factor)(int, double),
                   const std::array<std::array<double, 3>, 6>& published, double tolerance) {
  if (rhos.empty()) throw std::invalid_argument("rho grid is empty");
  Table table;
  table.name = std::move(name);
  table.header = {"dimension", "nodes"};
  for (double rho : rhos) table.header.push_back(rho_name(rho));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> row{std::to_string(n), std::to_string(std::uint64_t{1} << (2 * n))};
    for (double rho : rhos) {
      const double value = factor(n, rho);
      row.push_back(format_number(value));
      const int j = published_rho_index(rho);
      if (j >= 0 && n <= static_cast<int>(published.size())) {
        table.checks.push_back(check(table.name, n, rho_name(rho),
                                     published[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)],
                                     value, tolerance));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

bool Table::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CellCheck& c) { return c.pass; });
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

Table average_distance_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  Table table;
  table.name = "average_distance";
  table.header = {"n", "hc", "bh", "bvh", "status"};
  for (int n = 1; n <= max_n; ++n) {
    const double hc = origin_mean(Family::HC, n);
    const double bh = origin_mean(Family::BH, n);
    const double bvh = origin_mean(Family::BVH, n);
    const bool published = n <= static_cast<int>(reference::kAverageDistance.size());
    table.rows.push_back({std::to_string(n), format_number(hc), format_number(bh), format_number(bvh),
                          published ? "diffed" : "computed"});
    if (published) {
      const auto& ref = reference::kAverageDistance[static_cast<std::size_t>(n - 1)];
      table.checks.push_back(check(table.name, n, "hc", ref.hc, hc, kExact));
      table.checks.push_back(check(table.name, n, "bh", ref.bh, bh, reference::kTableAverageTolerance));
      table.checks.push_back(check(table.name, n, "bvh", ref.bvh, bvh, reference::kTableAverageTolerance));
    }
  }
  return table;
}

Table cef_table(std::span<const double> rhos, int max_n) {
  return factor_table("cef", rhos, max_n, &cef, reference::kCef, reference::kCefTolerance);
}

Table tcef_table(std::span<const double> rhos, int max_n) {
  return factor_table("tcef", rhos, max_n, &tcef, reference::kTcef, reference::kTcefTolerance);
}

Table comparison_table(int max_n) {
  if (max_n < 1 || max_n > 5) throw std::invalid_argument("comparison table needs 1 <= max_n <= 5");
  Table table;
  table.name = "comparison";
  table.header = {"family", "n", "nodes", "degree", "diameter", "diameter_closed_form",
                  "cost", "avg_distance_from_origin", "traffic_density"};
  for (Family family : {Family::HC, Family::VQ, Family::BH, Family::BVH}) {
    for (int n = 1; n <= max_n; ++n) {
      const TopologySpec spec(family, n);
      const MetricsReport report = compute_metrics(build_graph(spec));
      const MeasuredMetrics& m = report.measured;
      const auto& cf = report.closed_form.diameter;
      table.rows.push_back({std::string(to_string(family)), std::to_string(n), std::to_string(m.nodes),
                            std::to_string(m.degree_max), std::to_string(m.diameter),
                            cf ? std::to_string(*cf) : "", std::to_string(m.cost),
                            format_number(m.avg_distance_from_origin.value()),
                            format_number(m.traffic_density.value())});
    }
  }
  return table;
}

Table reliability_comparison_table(std::span<const double> times, double lambda_link, double lambda_proc) {
  const ReliabilityParams unit{1.0, 1.0, lambda_link, lambda_proc, 0.0};
  auto computed_classes = [&](Family family, int n, std::string_view s, std::string_view t) {
    const Graph g = build_graph(TopologySpec(family, n));
    return derive_and_evaluate(g, g.id_of(NodeLabel::parse(s)), g.id_of(NodeLabel::parse(t)), unit).classes;
  };
  const std::vector<std::pair<std::string, PathClassSet>> series{
      {"bvh3_published_classes", reference::bvh3_classes()},
      {"bvh3_computed", computed_classes(Family::BVH, 3, reference::kBvh3Source, reference::kBvh3Target)},
      {"bh3_computed", computed_classes(Family::BH, 3, reference::kBvh3Source, reference::kBvh3Target)},
      {"hc6_computed", computed_classes(Family::HC, 6, "0,0,0,0,0,0", "1,1,1,1,1,1")},
  };

  Table table;
  table.name = "reliability_curve";
  table.header = {"t_hours"};
  std::vector<std::vector<CurvePoint>> curves;
  for (const auto& [name, classes] : series) {
    table.header.push_back(name);
    curves.push_back(terminal_reliability_curve(classes, lambda_link, lambda_proc, times));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::vector<std::string> row{format_number(times[i])};
    for (const auto& curve : curves) row.push_back(format_number(curve[i].reliability));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string checks_to_csv(std::span<const CellCheck> checks) {
  std::string out = "table,n,column,reference,computed,tolerance,status\n";
  for (const CellCheck& c : checks) {
    out += c.table + ',' + std::to_string(c.n) + ',' + c.column + ',' + format_number(c.reference) + ',' +
           format_number(c.computed) + ',' + format_number(c.tolerance) + ',' + (c.pass ? "pass" : "FAIL") +
           '\n';
  }
  return out;
}

}  // namespace bvhnet
