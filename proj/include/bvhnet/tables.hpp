#pragma once

#include <span>
#include <string>
#include <vector>

namespace bvhnet {

/// One computed cell compared against a published value.
struct CellCheck {
  std::string table;
  int n = 0;
  std::string column;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<CellCheck> checks;

  bool all_pass() const;
};

/// Mean distance from the origin for HC, BH and BVH, n = 1..max_n, by BFS.
/// Rows with published values are diffed (HC exactly, BH/BVH at the
/// published tolerance); later rows are marked "computed".
Table average_distance_table(int max_n = 6);

/// CEF and TCEF grids, one column per rho. Cells whose rho is on the
/// published grid are diffed.
Table cef_table(std::span<const double> rhos, int max_n = 6);
Table tcef_table(std::span<const double> rhos, int max_n = 6);

/// Degree, diameter, cost, mean distance and traffic density for all four
/// families at n = 1..max_n (all-pairs BFS; max_n <= 5).
Table comparison_table(int max_n = 5);

/// Terminal reliability over time for 64-processor networks: BVH_3 from the
/// published path classes and from computed disjoint paths, BH_3 and HC_6
/// from computed disjoint paths.
Table reliability_comparison_table(std::span<const double> times, double lambda_link = 1e-4,
                                   double lambda_proc = 1e-3);

/// Fixed six-decimal rendering used by every CSV.
std::string format_number(double value);

std::string to_csv(const Table& table);
std::string checks_to_csv(std::span<const CellCheck> checks);

}  // namespace bvhnet
