#include "bvhnet/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bvhnet/comms.hpp"
#include "bvhnet/metrics.hpp"
#include "bvhnet/paths.hpp"
#include "bvhnet/reference.hpp"
#include "bvhnet/reliability.hpp"
#include "bvhnet/serialize.hpp"
#include "bvhnet/tables.hpp"
#include "bvhnet/topology.hpp"

namespace bvhnet::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "bvh";
  int dim = 2;
  std::string format;
  std::string output;
  std::string rules = "corrected";
  std::string source;
  std::string target;
  std::string root;
  std::string policy = "greedy";
  std::string table = "all";
  std::vector<double> rho{reference::kRhoGrid.begin(), reference::kRhoGrid.end()};
  int max_n = 6;
  unsigned threads = 0;
  bool paper_classes = false;
  bool curve = false;
  double rl = 0.9;
  double rp = 0.8;
  double lambda_link = 1e-4;
  double lambda_proc = 1e-3;
  double t_max = 5000.0;
  double t_step = 100.0;
  int precision = 4;
};

std::string spec_name(const TopologySpec& spec) {
  return std::string(to_string(spec.family)) + "_" + std::to_string(spec.dimension);
}

TopologySpec parse_spec(const Options& o) {
  try {
    TopologySpec spec(parse_family(o.family), o.dim);
    if (spec.node_count() > kMaxBuildNodes) throw UsageError(spec_name(spec) + " exceeds the node cap");
    return spec;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// All-pairs work is capped at n <= 5 for quaternary families, n <= 12 for binary ones.
void require_all_pairs_cap(const TopologySpec& spec) {
  const int cap = spec.radix() == 4 ? 5 : 12;
  if (spec.dimension > cap) {
    throw UsageError("all-pairs metrics are limited to n <= " + std::to_string(cap) + " for " +
                     std::string(to_string(spec.family)));
  }
}

BvhRules parse_rules(const std::string& text) {
  if (text == "corrected") return BvhRules::Corrected;
  if (text == "as-printed") return BvhRules::AsPrinted;
  throw UsageError("unknown rule set '" + text + "'");
}

NodeId parse_node(const Graph& graph, const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("--") + what + " is required");
  try {
    return graph.id_of(NodeLabel::parse(text));
  } catch (const MalformedLabelError& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

std::string join_labels(const Graph& graph, const std::vector<NodeId>& nodes, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i != 0) out += sep;
    out += graph.label(nodes[i]).to_string();
  }
  return out;
}

std::string fixed(double value, int precision) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << value;
  return s.str();
}

void require_clean(const std::vector<std::string>& problems, const std::string& what) {
  if (problems.empty()) return;
  std::string msg = what + " violates its invariants:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw InvariantError(msg);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.output);
  file << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

int cmd_build(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "plain"});
  const Graph graph = build_graph(parse_spec(o), parse_rules(o.rules));
  if (format == "text") {
    emit(o, out, graph_to_json(graph));
  } else {
    std::string text = spec_name(*graph.spec()) + ": " + std::to_string(graph.node_count()) + " nodes, " +
                       std::to_string(graph.edge_count()) + " edges\n";
    for (const auto& [u, v] : graph.edges()) {
      text += graph.label(u).to_string() + " - " + graph.label(v).to_string() + "\n";
    }
    emit(o, out, text);
  }
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "plain" : o.format;
  require_format(format, {"text", "plain"});
  const TopologySpec spec = parse_spec(o);
  const AdjacencyAuditReport report = audit_graph(spec, parse_rules(o.rules));
  if (format == "text") {
    emit(o, out, audit_to_json(report));
    return kExitOk;
  }
  std::ostringstream s;
  s << spec_name(spec) << " (rules: " << to_string(report.rules) << ")\n"
    << "expected degree: " << report.expected_degree << "\n"
    << "degree violations: " << report.degree_violations.size() << "\n"
    << "one-directional emissions repaired by closure: " << report.one_directional.size() << "\n"
    << "duplicate emissions: " << report.duplicate_emissions << "\n"
    << "nodes with a matching partner: " << report.nodes_with_partner() << "/" << report.degree.size() << "\n";
  for (NodeId u = 0; u < report.matching_partners.size(); ++u) {
    for (NodeId w : report.matching_partners[u]) {
      if (u < w) s << "  " << index_to_label(spec, u).to_string() << " ~ " << index_to_label(spec, w).to_string() << "\n";
    }
  }
  for (const auto& [u, v] : report.one_directional) {
    s << "  one-directional: " << index_to_label(spec, u).to_string() << " -> "
      << index_to_label(spec, v).to_string() << "\n";
  }
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "plain" : o.format;
  require_format(format, {"text", "plain", "csv"});
  const TopologySpec spec = parse_spec(o);
  require_all_pairs_cap(spec);
  const MetricsReport report = compute_metrics(build_graph(spec), o.threads);
  const MeasuredMetrics& m = report.measured;
  const ClosedForm& cf = report.closed_form;
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };

  if (format == "text") {
    emit(o, out, metrics_to_json(report));
  } else if (format == "csv") {
    std::string text =
        "family,n,degree_min,degree_max,nodes,edges,diameter,avg_distance_from_origin,"
        "avg_distance_all_pairs,traffic_density,cost,uniform_distance_profile,"
        "cf_degree,cf_nodes,cf_edges,cf_diameter,cf_cost\n";
    text += std::string(to_string(spec.family)) + "," + std::to_string(spec.dimension) + "," +
            std::to_string(m.degree_min) + "," + std::to_string(m.degree_max) + "," + std::to_string(m.nodes) +
            "," + std::to_string(m.edges) + "," + std::to_string(m.diameter) + "," +
            format_number(m.avg_distance_from_origin.value()) + "," +
            format_number(m.avg_distance_all_pairs.value()) + "," + format_number(m.traffic_density.value()) +
            "," + std::to_string(m.cost) + "," + (m.uniform_distance_profile ? "true" : "false") + "," +
            opt(cf.degree) + "," + opt(cf.nodes) + "," + opt(cf.edges) + "," + opt(cf.diameter) + "," +
            opt(cf.cost) + "\n";
    emit(o, out, text);
  } else {
    std::ostringstream s;
    s << spec_name(spec) << "\n"
      << "  degree             " << m.degree_min << ".." << m.degree_max << " (closed form " << opt(cf.degree) << ")\n"
      << "  nodes              " << m.nodes << " (closed form " << opt(cf.nodes) << ")\n"
      << "  edges              " << m.edges << " (closed form " << opt(cf.edges) << ")\n"
      << "  diameter           " << m.diameter << " (closed form " << opt(cf.diameter) << ")\n"
      << "  cost               " << m.cost << " (closed form " << opt(cf.cost) << ")\n"
      << "  avg dist (origin)  " << m.avg_distance_from_origin.to_string() << " = "
      << format_number(m.avg_distance_from_origin.value()) << "\n"
      << "  avg dist (pairs)   " << m.avg_distance_all_pairs.to_string() << " = "
      << format_number(m.avg_distance_all_pairs.value()) << "\n"
      << "  traffic density    " << m.traffic_density.to_string() << " = "
      << format_number(m.traffic_density.value()) << "\n"
      << "  uniform distance profile: " << (m.uniform_distance_profile ? "yes" : "no") << "\n";
    for (const auto& d : report.deviations) s << "  deviation: " << d << "\n";
    emit(o, out, s.str());
  }
  return kExitOk;
}

std::vector<double> time_grid(const Options& o) {
  if (!(o.t_max >= 0.0) || !(o.t_step > 0.0)) throw UsageError("need --t-max >= 0 and --t-step > 0");
  std::vector<double> times;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * o.t_step;
    if (t > o.t_max + 1e-9) break;
    times.push_back(t);
  }
  return times;
}

int cmd_tables(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& which = o.table;
  const bool all = which == "all";
  if (!all && which != "avg" && which != "cef" && which != "tcef" && which != "compare" && which != "reliability") {
    throw UsageError("unknown --table '" + which + "'");
  }
  if (o.max_n < 1 || o.max_n > 10) throw UsageError("--max-n must be in 1..10");
  for (double rho : o.rho) {
    if (!(rho > 0.0)) throw UsageError("--rho values must be positive");
  }

  std::vector<std::pair<std::string, Table>> tables;
  if (all || which == "avg") tables.emplace_back("table1_average_distance.csv", average_distance_table(o.max_n));
  if (all || which == "cef") tables.emplace_back("table2_cef.csv", cef_table(o.rho, o.max_n));
  if (all || which == "tcef") tables.emplace_back("table3_tcef.csv", tcef_table(o.rho, o.max_n));
  if (all || which == "compare") tables.emplace_back("comparison.csv", comparison_table(std::min(o.max_n, 5)));
  if (all || which == "reliability") {
    const auto times = time_grid(o);
    tables.emplace_back("reliability_curve.csv", reliability_comparison_table(times, o.lambda_link, o.lambda_proc));
  }

  std::vector<CellCheck> checks;
  for (const auto& [file, table] : tables) checks.insert(checks.end(), table.checks.begin(), table.checks.end());
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const CellCheck& c) { return c.pass; });

  if (o.output.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (tables.size() > 1) out << (i == 0 ? "" : "\n") << "# " << tables[i].first << "\n";
      out << to_csv(tables[i].second);
    }
    if (!checks.empty()) err << checks_to_csv(checks);
  } else {
    std::filesystem::create_directories(o.output);
    for (const auto& [file, table] : tables) {
      std::ofstream f(std::filesystem::path(o.output) / file, std::ios::binary);
      f << to_csv(table);
    }
    std::ofstream f(std::filesystem::path(o.output) / "diff.csv", std::ios::binary);
    f << checks_to_csv(checks);
  }
  err << "diff: " << passed << "/" << checks.size() << " cells within tolerance\n";
  return static_cast<std::size_t>(passed) == checks.size() ? kExitOk : kExitFailure;
}

int cmd_route(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "plain" : o.format;
  require_format(format, {"text", "plain"});
  const TopologySpec spec = parse_spec(o);
  const Graph graph = build_graph(spec);
  const NodeId u = parse_node(graph, o.source, "source");
  const NodeId v = parse_node(graph, o.target, "target");
  RouteTrace trace;
  if (o.policy == "greedy") {
    if (spec.family != Family::BVH) throw UsageError("greedy routing is defined for BVH only");
    trace = route_greedy(graph, u, v);
  } else if (o.policy == "oracle") {
    trace = route_oracle(graph, u, v);
  } else {
    throw UsageError("unknown --policy '" + o.policy + "'");
  }
  require_clean(trace_violations(graph, trace), "route");
  if (format == "text") {
    emit(o, out, trace_to_json(graph, trace));
  } else {
    emit(o, out, join_labels(graph, trace.hops, " -> ") + " (" + std::to_string(trace.length()) + " hops, " +
                     std::string(to_string(trace.policy)) + ")\n");
  }
  return kExitOk;
}

int cmd_broadcast(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "plain" : o.format;
  require_format(format, {"text", "plain"});
  const Graph graph = build_graph(parse_spec(o));
  const NodeId root = parse_node(graph, o.root.empty() ? index_to_label(*graph.spec(), 0).to_string() : o.root, "root");
  const BroadcastSchedule schedule = broadcast_schedule(graph, root);
  require_clean(schedule_violations(graph, schedule), "broadcast schedule");
  if (format == "text") {
    emit(o, out, schedule_to_json(graph, schedule));
    return kExitOk;
  }
  std::string text = "root " + graph.label(root).to_string() + ", " + std::to_string(schedule.rounds.size()) + " rounds\n";
  for (std::size_t r = 0; r < schedule.rounds.size(); ++r) {
    text += "round " + std::to_string(r + 1) + "\n";
    for (const auto& [sender, receiver] : schedule.rounds[r]) {
      text += "  " + graph.label(sender).to_string() + " -> " + graph.label(receiver).to_string() + "\n";
    }
  }
  emit(o, out, text);
  return kExitOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "plain" : o.format;
  require_format(format, {"text", "plain"});
  const Graph graph = build_graph(parse_spec(o));
  const NodeId s = parse_node(graph, o.source, "source");
  const NodeId t = parse_node(graph, o.target, "target");
  if (s == t) throw UsageError("--source and --target must differ");
  const DisjointPathSet set = max_disjoint_paths(graph, s, t);
  require_clean(path_set_violations(graph, set), "disjoint path set");
  if (format == "text") {
    emit(o, out, path_set_to_json(graph, set));
    return kExitOk;
  }
  std::string text = std::to_string(set.paths.size()) + " disjoint paths\n";
  for (std::size_t i = 0; i < set.paths.size(); ++i) {
    text += "path " + std::to_string(i + 1) + ": " + join_labels(graph, set.paths[i], " ") + "\n";
  }
  text += "classes (count,links,intermediates): " + classify_paths(set).to_string() + "\n";
  emit(o, out, text);
  return kExitOk;
}

int cmd_reliability(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? (o.curve ? "csv" : "plain") : o.format;
  require_format(format, {"plain", "csv"});
  const TopologySpec spec = parse_spec(o);
  ReliabilityParams params{o.rl, o.rp, o.lambda_link, o.lambda_proc, 0.0};
  try {
    params.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  std::string source = o.source;
  std::string target = o.target;
  std::optional<PathClassSet> published;
  if (o.paper_classes) {
    if (spec.family != Family::BVH || (spec.dimension != 2 && spec.dimension != 3)) {
      throw UsageError("published path classes exist for BVH_2 and BVH_3 only");
    }
    published = spec.dimension == 2 ? reference::bvh2_classes() : reference::bvh3_classes();
    if (source.empty()) source = std::string(spec.dimension == 2 ? reference::kBvh2Source : reference::kBvh3Source);
    if (target.empty()) target = std::string(spec.dimension == 2 ? reference::kBvh2Target : reference::kBvh3Target);
  }
  const Graph graph = build_graph(spec);
  const NodeId s = parse_node(graph, source, "source");
  const NodeId t = parse_node(graph, target, "target");
  if (s == t) throw UsageError("--source and --target must differ");
  const DerivedReliability derived = derive_and_evaluate(graph, s, t, params);
  require_clean(path_set_violations(graph, derived.paths), "disjoint path set");

  if (o.curve) {
    const auto times = time_grid(o);
    std::string text = "t_hours";
    if (published) text += ",published_classes";
    text += ",computed\n";
    const auto computed = terminal_reliability_curve(derived.classes, o.lambda_link, o.lambda_proc, times);
    std::vector<CurvePoint> reference_curve;
    if (published) reference_curve = terminal_reliability_curve(*published, o.lambda_link, o.lambda_proc, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      text += format_number(times[i]);
      if (published) text += "," + format_number(reference_curve[i].reliability);
      text += "," + format_number(computed[i].reliability) + "\n";
    }
    emit(o, out, text);
    return kExitOk;
  }

  if (format == "csv") {
    std::string text = "classes_from,classes,r_link,r_proc,terminal_reliability\n";
    auto row = [&](const char* from, const PathClassSet& c) {
      text += std::string(from) + ",\"" + c.to_string() + "\"," + format_number(o.rl) + "," + format_number(o.rp) +
              "," + format_number(terminal_reliability(c, o.rl, o.rp)) + "\n";
    };
    if (published) row("published", *published);
    row("computed", derived.classes);
    emit(o, out, text);
    return kExitOk;
  }

  std::string text;
  if (published) {
    text += "published-classes " + published->to_string() + " " +
            fixed(terminal_reliability(*published, o.rl, o.rp), o.precision) + "\n";
  }
  text += "computed-classes  " + derived.classes.to_string() + " " + fixed(derived.reliability, o.precision) + "\n";
  emit(o, out, text);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Balanced varietal hypercube topology analysis"};
  app.require_subcommand(1);

  auto add_topology = [&o](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "hc, vq, bh or bvh")->capture_default_str();
    cmd->add_option("--dim", o.dim, "dimension n")->capture_default_str();
  };
  auto add_output = [&o](CLI::App* cmd, const char* formats) {
    cmd->add_option("--format", o.format, formats);
    cmd->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };

  auto* build = app.add_subcommand("build", "emit the graph as structured text");
  add_topology(build);
  add_output(build, "text (default) or plain");
  build->add_option("--rules", o.rules, "BVH outer table: corrected or as-printed")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "audit rule symmetry, degrees and matching pairs");
  add_topology(audit);
  add_output(audit, "plain (default) or text");
  audit->add_option("--rules", o.rules, "BVH outer table: corrected or as-printed")->capture_default_str();

  auto* metrics = app.add_subcommand("metrics", "measured vs closed-form metrics");
  add_topology(metrics);
  add_output(metrics, "plain (default), text or csv");
  metrics->add_option("--threads", o.threads, "BFS workers (0 = hardware)");

  auto* tables = app.add_subcommand("tables", "emit metric, CEF, TCEF and reliability tables and diff them");
  tables->add_option("--table", o.table, "avg, cef, tcef, compare, reliability or all")->capture_default_str();
  tables->add_option("--rho", o.rho, "link/processor cost ratios");
  tables->add_option("--max-n", o.max_n, "largest dimension")->capture_default_str();
  tables->add_option("--output,-o", o.output, "directory for CSV files");
  tables->add_option("--lambda-link", o.lambda_link, "link failure rate per hour")->capture_default_str();
  tables->add_option("--lambda-proc", o.lambda_proc, "processor failure rate per hour")->capture_default_str();
  tables->add_option("--t-max", o.t_max, "last time point (hours)")->capture_default_str();
  tables->add_option("--t-step", o.t_step, "time step (hours)")->capture_default_str();

  auto* route = app.add_subcommand("route", "route a message between two nodes");
  add_topology(route);
  add_output(route, "plain (default) or text");
  route->add_option("--source", o.source, "comma-separated label");
  route->add_option("--target", o.target, "comma-separated label");
  route->add_option("--policy", o.policy, "greedy or oracle")->capture_default_str();

  auto* broadcast = app.add_subcommand("broadcast", "all-port one-to-all broadcast schedule");
  add_topology(broadcast);
  add_output(broadcast, "plain (default) or text");
  broadcast->add_option("--root", o.root, "comma-separated label (default all zeros)");

  auto* paths = app.add_subcommand("paths", "maximum vertex-disjoint paths");
  add_topology(paths);
  add_output(paths, "plain (default) or text");
  paths->add_option("--source", o.source, "comma-separated label");
  paths->add_option("--target", o.target, "comma-separated label");

  auto* reliability = app.add_subcommand("reliability", "terminal reliability over disjoint paths");
  add_topology(reliability);
  add_output(reliability, "plain (default) or csv");
  reliability->add_option("--source", o.source, "comma-separated label");
  reliability->add_option("--target", o.target, "comma-separated label");
  reliability->add_flag("--paper-classes", o.paper_classes, "also evaluate the published path classes");
  reliability->add_option("--rl", o.rl, "link reliability")->capture_default_str();
  reliability->add_option("--rp", o.rp, "processor reliability")->capture_default_str();
  reliability->add_flag("--curve", o.curve, "emit reliability over time as CSV");
  reliability->add_option("--lambda-link", o.lambda_link, "link failure rate per hour")->capture_default_str();
  reliability->add_option("--lambda-proc", o.lambda_proc, "processor failure rate per hour")->capture_default_str();
  reliability->add_option("--t-max", o.t_max, "last time point (hours)")->capture_default_str();
  reliability->add_option("--t-step", o.t_step, "time step (hours)")->capture_default_str();
  reliability->add_option("--precision", o.precision, "decimals in plain output")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (audit->parsed()) return cmd_audit(o, out);
    if (metrics->parsed()) return cmd_metrics(o, out);
    if (tables->parsed()) return cmd_tables(o, out, err);
    if (route->parsed()) return cmd_route(o, out);
    if (broadcast->parsed()) return cmd_broadcast(o, out);
    if (paths->parsed()) return cmd_paths(o, out);
    if (reliability->parsed()) return cmd_reliability(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bvhnet::cli
