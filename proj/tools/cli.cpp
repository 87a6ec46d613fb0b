#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "demkit/edge_list.hpp"
#include "demkit/generators.hpp"
#include "demkit/monitor.hpp"
#include "demkit/report.hpp"
#include "demkit/solvers.hpp"
#include "demkit/structural.hpp"

namespace demkit::cli {

namespace {

using report::Json;

struct RunConfig {
  std::string input;
  std::string gen;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timing = false;
};

struct Loaded {
  LabeledGraph lg;
  std::map<std::string, Vertex> roles;
};

/// Raised for budget exhaustion after the partial report is written.
struct BudgetExceeded {};

Loaded load(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.gen.empty())
    throw Error(ErrorCode::BadParameter, "give exactly one of an input file or --gen family:params");
  Loaded out;
  if (!cfg.gen.empty()) {
    FamilyInstance inst = generate(cfg.gen, cfg.seed);
    out.lg = with_index_labels(std::move(inst.graph));
    out.roles = std::move(inst.designated);
    return out;
  }
  std::ifstream in(cfg.input);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + cfg.input);
  out.lg = read_edge_list(in);
  for (const auto& [key, value] : out.lg.header) {
    if (key == "family" || key == "params" || key == "seed") continue;
    try {
      out.roles[key] = out.lg.vertex(value);
    } catch (const Error&) {
      // Header keys that do not name a vertex are plain metadata.
    }
  }
  return out;
}

Vertex resolve(const Loaded& l, const std::string& name) {
  auto role = l.roles.find(name);
  for (Vertex v = 0; v < l.lg.graph.order(); ++v)
    if (l.lg.label(v) == name) return v;
  if (role != l.roles.end()) return role->second;
  throw Error(ErrorCode::BadParameter, "unknown vertex '" + name + "'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Vertex> resolve_monitors(const Loaded& l, const std::string& spec) {
  std::vector<Vertex> out;
  if (spec == "all") {
    for (Vertex v = 0; v < l.lg.graph.order(); ++v) out.push_back(v);
    return out;
  }
  for (const auto& name : split_list(spec)) out.push_back(resolve(l, name));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Edge resolve_edge(const Loaded& l, const std::string& spec) {
  if (spec == "centers") {
    auto a = l.roles.find("center1"), b = l.roles.find("center2");
    if (a == l.roles.end() || b == l.roles.end())
      throw Error(ErrorCode::BadParameter, "'centers' needs designated center1 and center2 vertices");
    return Edge(a->second, b->second);
  }
  const auto parts = split_list(spec);
  if (parts.size() != 2) throw Error(ErrorCode::BadParameter, "edge must be given as u,v");
  return Edge(resolve(l, parts[0]), resolve(l, parts[1]));
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_dot(std::ostream& out, const LabeledGraph& lg, std::span<const Vertex> monitors,
               std::span<const Edge> highlighted, const char* highlight_color) {
  out << "graph G {\n";
  for (Vertex v = 0; v < lg.graph.order(); ++v) {
    out << "  " << quoted(lg.label(v));
    if (std::find(monitors.begin(), monitors.end(), v) != monitors.end())
      out << " [style=filled, fillcolor=lightblue]";
    out << ";\n";
  }
  for (const Edge& e : lg.graph.edges()) {
    out << "  " << quoted(lg.label(e.u)) << " -- " << quoted(lg.label(e.v));
    if (std::find(highlighted.begin(), highlighted.end(), e) != highlighted.end())
      out << " [color=" << highlight_color << ", penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
}

[[noreturn]] void unsupported(const std::string& command, const std::string& format) {
  throw Error(ErrorCode::BadParameter, "format '" + format + "' is not available for '" + command + "'");
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string edge_text(const LabeledGraph& lg, Edge e) { return lg.label(e.u) + "," + lg.label(e.v); }

// --- subcommands -----------------------------------------------------------

void cmd_dem(const RunConfig& cfg, const std::string& method, std::int64_t budget, std::ostream& out) {
  const Loaded l = load(cfg);
  const Graph& g = l.lg.graph;
  std::vector<DemResult> results;
  if (method == "exact" || method == "both") results.push_back(dem_exact(g, ExactOptions{budget}));
  if (method == "greedy" || method == "both") results.push_back(dem_greedy(g));
  if (!cfg.timing)
    for (auto& r : results) r.stats.millis = 0;

  if (cfg.format == "json") {
    if (results.size() == 1) {
      emit_json(out, report::dem_result(l.lg, results[0]));
    } else {
      emit_json(out, Json{{"exact", report::dem_result(l.lg, results[0])},
                          {"greedy", report::dem_result(l.lg, results[1])}});
    }
  } else if (cfg.format == "text") {
    for (const auto& r : results) {
      out << to_string(r.method) << ": dem = " << r.value << (r.exact ? "" : " (not proven minimum)")
          << "\n  monitors:";
      for (Vertex v : r.monitor_set) out << ' ' << l.lg.label(v);
      out << "\n  nodes: " << r.stats.nodes << '\n';
    }
  } else if (cfg.format == "csv") {
    out << "method,value,exact,monitor\n";
    for (const auto& r : results)
      for (Vertex v : r.monitor_set)
        out << to_string(r.method) << ',' << r.value << ',' << (r.exact ? "true" : "false") << ',' << l.lg.label(v)
            << '\n';
  } else if (cfg.format == "dot") {
    write_dot(out, l.lg, results[0].monitor_set, results[0].certificate.uncovered, "red");
  } else {
    unsupported("dem", cfg.format);
  }
  for (const auto& r : results)
    if (r.method == Method::Exact && !r.exact) throw BudgetExceeded{};
}

void cmd_em(const RunConfig& cfg, const std::string& vertex, bool naive, std::ostream& out) {
  const Loaded l = load(cfg);
  const Vertex x = resolve(l, vertex);
  const EmSet em = naive ? em_set_naive(l.lg.graph, x) : em_set(l.lg.graph, x);
  if (cfg.format == "json") {
    emit_json(out, report::em_set(l.lg, em));
  } else if (cfg.format == "text") {
    out << "EM(" << l.lg.label(x) << ") has " << em.size() << " edges\n";
    for (const Edge& e : em.edges) out << "  " << edge_text(l.lg, e) << '\n';
  } else if (cfg.format == "csv") {
    out << "u,v\n";
    for (const Edge& e : em.edges) out << edge_text(l.lg, e) << '\n';
  } else if (cfg.format == "dot") {
    const std::array<Vertex, 1> monitor{x};
    write_dot(out, l.lg, monitor, em.edges, "blue");
  } else {
    unsupported("em", cfg.format);
  }
}

void cmd_pset(const RunConfig& cfg, const std::string& monitors, const std::string& edge, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto ms = resolve_monitors(l, monitors);
  const Edge e = resolve_edge(l, edge);
  const PairSet ps = p_set(l.lg.graph, ms, e);
  if (cfg.format == "json") {
    emit_json(out, report::p_set(l.lg, ms, e, ps));
  } else if (cfg.format == "text") {
    out << "|P(M, " << edge_text(l.lg, e) << ")| = " << ps.size() << '\n';
    for (const auto& p : ps.pairs) out << "  (" << l.lg.label(p.monitor) << ", " << l.lg.label(p.target) << ")\n";
  } else if (cfg.format == "csv") {
    out << "monitor,target\n";
    for (const auto& p : ps.pairs) out << l.lg.label(p.monitor) << ',' << l.lg.label(p.target) << '\n';
  } else {
    unsupported("pset", cfg.format);
  }
}

void cmd_verify(const RunConfig& cfg, const std::string& monitors, std::ostream& out) {
  const Loaded l = load(cfg);
  const auto ms = resolve_monitors(l, monitors);
  const MonitoringCertificate cert = is_monitoring_set(l.lg.graph, ms);
  if (cfg.format == "json") {
    Json j{{"monitors", report::vertices(l.lg, ms)}, {"monitoring", cert.is_monitoring_set()}};
    const Json certificate = report::certificate(l.lg, cert);
    for (const auto& [key, value] : certificate.items()) j[key] = value;
    emit_json(out, j);
  } else if (cfg.format == "text") {
    out << (cert.is_monitoring_set() ? "monitoring set" : "not a monitoring set") << '\n';
    for (const auto& [e, w] : cert.witnesses)
      out << "  " << edge_text(l.lg, e) << " <- (" << l.lg.label(w.monitor) << ", " << l.lg.label(w.target) << ")\n";
    for (const Edge& e : cert.uncovered) out << "  " << edge_text(l.lg, e) << " uncovered\n";
  } else if (cfg.format == "csv") {
    out << "u,v,monitor,target\n";
    for (const Edge& e : l.lg.graph.edges()) {
      out << edge_text(l.lg, e) << ',';
      auto it = cert.witnesses.find(e);
      if (it == cert.witnesses.end()) out << ",\n";
      else out << l.lg.label(it->second.monitor) << ',' << l.lg.label(it->second.target) << '\n';
    }
  } else if (cfg.format == "dot") {
    write_dot(out, l.lg, ms, cert.uncovered, "red");
  } else {
    unsupported("verify", cfg.format);
  }
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const BoundsReport b = bounds_report(l.lg.graph);
  const Json j = report::bounds(l.lg, b);
  if (cfg.format == "json") {
    emit_json(out, j);
  } else if (cfg.format == "text" || cfg.format == "csv") {
    if (cfg.format == "csv") out << "bound,value\n";
    for (const auto& [key, value] : j.items()) {
      if (key == "em_per_vertex") continue;
      out << key << (cfg.format == "csv" ? "," : ": ") << value.dump() << '\n';
    }
  } else {
    unsupported("bounds", cfg.format);
  }
}

// Scans every tuple of the base graph; reports the first structural match,
// the first direct match and how often the two verdicts disagree.
Json scan_tuples(const Graph& gb, const LabeledGraph& base_labels, int target, const std::set<std::string>& disabled,
                 const std::vector<Vertex>& forced, Dem2Reading reading) {
  const int n = gb.order();
  std::vector<std::vector<Vertex>> tuples;
  if (!forced.empty()) {
    tuples.push_back(forced);
  } else if (target == 2) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) tuples.push_back({a, b});
  } else {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c) tuples.push_back({a, b, c});
  }
  std::optional<ConditionReport> first_structural, first_direct;
  int discrepancies = 0;
  for (const auto& t : tuples) {
    ConditionReport r = target == 2 ? dem2_pair_check(gb, t[0], t[1], reading)
                                    : dem3_triple_check(gb, t[0], t[1], t[2], disabled);
    if (r.discrepancy) ++discrepancies;
    if (r.structural_pass() && !first_structural) first_structural = r;
    if (r.direct_check && !first_direct) first_direct = r;
  }
  Json j{{"target", target},
         {"base_order", n},
         {"tuples_checked", tuples.size()},
         {"structural_match", first_structural ? report::vertices(base_labels, first_structural->tuple) : Json()},
         {"direct_match", first_direct ? report::vertices(base_labels, first_direct->tuple) : Json()},
         {"discrepancies", discrepancies},
         {"discrepancy", discrepancies > 0}};
  const auto& shown = first_structural ? first_structural : first_direct;
  if (shown) j["report"] = report::condition_report(base_labels, *shown);
  else if (!tuples.empty()) j["report"] = Json();
  return j;
}

void cmd_char(const RunConfig& cfg, int target, const std::string& tuple, const std::vector<std::string>& disable,
              const std::string& reading, std::ostream& out) {
  const Loaded l = load(cfg);
  const Graph& g = l.lg.graph;
  require_connected(g, "char");
  Json j;
  if (target == 1) {
    const bool tree = is_tree(g);
    j = Json{{"target", 1}, {"is_tree", tree}, {"dem_is_1", tree}};
  } else {
    if (is_tree(g)) throw Error(ErrorCode::IsTree, "the graph is a tree, so dem = 1; use --target 1");
    const BaseGraph base = base_graph(g);
    LabeledGraph base_labels;
    base_labels.graph = base.graph;
    for (Vertex v : base.to_original) base_labels.labels.push_back(l.lg.label(v));
    std::vector<Vertex> forced;
    for (const auto& name : split_list(tuple)) {
      const auto mapped = base.to_base[resolve(l, name)];
      if (!mapped) throw Error(ErrorCode::BadParameter, "vertex '" + name + "' is not in the base graph");
      forced.push_back(*mapped);
    }
    if (!forced.empty() && static_cast<int>(forced.size()) != target)
      throw Error(ErrorCode::BadParameter, "--tuple must list exactly " + std::to_string(target) + " vertices");
    const std::set<std::string> disabled(disable.begin(), disable.end());
    j = scan_tuples(base.graph, base_labels, target, disabled, forced,
                    reading == "repaired" ? Dem2Reading::Repaired : Dem2Reading::AsStated);
    if (target == 2) j["reading"] = reading;
  }
  if (cfg.format == "json") {
    emit_json(out, j);
  } else if (cfg.format == "text") {
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
  } else {
    unsupported("char", cfg.format);
  }
}

void cmd_gen(const std::string& spec, std::uint64_t seed, std::ostream& out) {
  FamilyInstance inst = generate(spec, seed);
  LabeledGraph lg = with_index_labels(inst.graph);
  lg.header.emplace_back("family", inst.family);
  std::string params;
  for (std::size_t k = 0; k < inst.params.size(); ++k) params += (k ? "," : "") + inst.params[k];
  lg.header.emplace_back("params", params);
  if (inst.seed) lg.header.emplace_back("seed", std::to_string(*inst.seed));
  for (const auto& [role, v] : inst.designated) lg.header.emplace_back(role, std::to_string(v));
  write_edge_list(out, lg);
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return kDisconnected;
    case ErrorCode::Overflow: return kFailure;
    default: return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-edge-monitoring toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Edge-list file (`n m` header, then `u v` lines)");
    sub->add_option("--gen", cfg.gen, "Generate the input instead, e.g. grid:4,4");
    sub->add_option("--seed", cfg.seed, "Seed for random families");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "csv", "dot"}));
    sub->add_flag("--timing", cfg.timing, "Report wall-clock milliseconds (output is then not reproducible)");
  };

  std::string method = "exact";
  std::int64_t budget = kDefaultNodeBudget;
  auto* dem = app.add_subcommand("dem", "Distance-edge-monitoring number");
  add_input(dem);
  dem->add_option("--method", method, "exact, greedy or both")->check(CLI::IsMember({"exact", "greedy", "both"}));
  dem->add_option("--budget", budget, "Branch-and-bound node limit")->check(CLI::PositiveNumber);

  std::string vertex;
  bool naive = false;
  auto* em = app.add_subcommand("em", "Edges monitored by one vertex");
  add_input(em);
  em->add_option("--vertex", vertex, "Monitor vertex")->required();
  em->add_flag("--naive", naive, "Use the deletion-based oracle");

  std::string monitors, edge;
  auto* pset = app.add_subcommand("pset", "Pairs whose distance changes when an edge fails");
  add_input(pset);
  pset->add_option("--monitors", monitors, "Comma-separated vertices or `all`")->required();
  pset->add_option("--edge", edge, "u,v or `centers`")->required();

  auto* verify = app.add_subcommand("verify", "Check a monitor set and print its certificate");
  add_input(verify);
  verify->add_option("--monitors", monitors, "Comma-separated vertices or `all`")->required();

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on dem");
  add_input(bounds);

  int target = 2;
  std::string tuple;
  std::vector<std::string> disable;
  auto* chr = app.add_subcommand("char", "Structural characterization checks for dem = 1, 2, 3");
  add_input(chr);
  chr->add_option("--target", target, "1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
  chr->add_option("--tuple", tuple, "Check only this pair/triple");
  chr->add_option("--disable-rule", disable, "Skip a named rule of the three-monitor conditions");
  std::string reading = "as-stated";
  chr->add_option("--reading", reading, "Two-monitor conditions: as-stated or repaired")
      ->check(CLI::IsMember({"as-stated", "repaired"}));

  std::string family;
  auto* gen = app.add_subcommand("gen", "Write a named graph family as an edge list");
  gen->add_option("family", family, "family:params, e.g. doublestar:3,3")->required();
  gen->add_option("--seed", cfg.seed, "Seed for random families");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (dem->parsed()) cmd_dem(cfg, method, budget, out);
    else if (em->parsed()) cmd_em(cfg, vertex, naive, out);
    else if (pset->parsed()) cmd_pset(cfg, monitors, edge, out);
    else if (verify->parsed()) cmd_verify(cfg, monitors, out);
    else if (bounds->parsed()) cmd_bounds(cfg, out);
    else if (chr->parsed()) cmd_char(cfg, target, tuple, disable, reading, out);
    else if (gen->parsed()) cmd_gen(family, cfg.seed, out);
  } catch (const BudgetExceeded&) {
    err << "error: node budget exhausted; reported set is the best found, not a proven minimum\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace demkit::cli
