#pragma once

// Command-line front end. Exit codes: 0 success, 1 theorem violation,
// 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrlab/irrlab.hpp"

namespace irrlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct Caps {
  int trees = 16;
  int labeled = kDefaultLabeledGraphCap;
  int exact_path = kDefaultExactPathCap;

  /// IRRLAB_CAP is either one integer (tree and graph caps) or "trees=N,graphs=N,paths=N".
  void apply_override(const std::string& spec) {
    if (spec.empty()) return;
    if (spec.find('=') == std::string::npos) {
      trees = labeled = std::stoi(spec);
      return;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad cap entry '" + item + "'");
      const std::string key = item.substr(0, eq);
      const int value = std::stoi(item.substr(eq + 1));
      if (key == "trees") trees = value;
      else if (key == "graphs") labeled = value;
      else if (key == "paths") exact_path = value;
      else throw Error(ErrorKind::InvalidArgument, "unknown cap '" + key + "'");
    }
  }
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "edges") out << write_edge_list(g);
  else out << write_graph6(g) << '\n';
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q.push_back(c);
  }
  return q + "\"";
}

/// Flattens the "rows" array of a scan report into CSV (nested fields dropped).
inline std::string rows_to_csv(const Json& report) {
  const Json& rows = report.at("rows");
  if (rows.empty()) return "";
  std::string out;
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
    if (!it.value().is_structured()) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const Json& v = row.at(keys[i]);
      out += (i ? "," : "") + csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
    }
    out += '\n';
  }
  return out;
}

template <class Summary>
int report_scan(const Summary& summary, const std::string& format, std::ostream& out, std::ostream& err) {
  const Json j = summary.to_json();
  if (format == "csv") out << rows_to_csv(j);
  else out << j.dump(2) << '\n';
  if (summary.violation_count() == 0) return kExitOk;
  for (const auto& row : j.at("rows")) {
    if (!row.contains("violation_list")) continue;
    for (const auto& v : row.at("violation_list"))
      err << "witness " << v.at("check").get<std::string>() << ' ' << v.at("graph6").get<std::string>() << '\n';
  }
  return kExitViolation;
}

}  // namespace detail

/// Runs the CLI on argv (argv[0] is the program name).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"irrlab: graph irregularity measures, extremal constructions and exhaustive checks"};
  app.require_subcommand(1);

  int jobs = 1;
  bool timing = false;
  int unsafe_cap = 0;
  app.add_option("--jobs", jobs, "worker threads for scans")->check(CLI::Range(1, 1024));
  app.add_flag("--timing", timing, "print elapsed time to stderr");
  app.add_option("--unsafe-cap", unsafe_cap, "raise the tree and labeled-graph size caps to N")->check(CLI::Range(1, 64));

  // measure
  auto* measure = app.add_subcommand("measure", "irregularity measures of graphs (graph6 lines or an edge list)");
  std::string in_path;
  std::string measure_fmt = "csv";
  measure->add_option("--in", in_path, "input file, '-' for stdin")->required();
  measure->add_option("--out", measure_fmt)->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive theorem checks");
  verify->require_subcommand(1);
  auto* v_trees = verify->add_subcommand("trees", "all free trees of each order");
  auto* v_graphs = verify->add_subcommand("graphs", "all connected labeled graphs of each order");
  auto* v_greedy = verify->add_subcommand("greedy", "greedy-tree identity and minimality");
  auto* v_oracles = verify->add_subcommand("oracles", "randomised oracle cross-checks");
  int vt_min = 3, vt_max = 10;
  std::string vt_fmt = "json";
  v_trees->add_option("--n-min", vt_min)->check(CLI::Range(3, 64));
  v_trees->add_option("--n-max", vt_max)->check(CLI::Range(3, 64));
  v_trees->add_option("--out", vt_fmt)->check(CLI::IsMember({"json", "csv"}));
  int vg_min = 1, vg_max = 6;
  std::string vg_fmt = "json";
  v_graphs->add_option("--n-min", vg_min)->check(CLI::Range(1, 64));
  v_graphs->add_option("--n-max", vg_max)->check(CLI::Range(1, 64));
  v_graphs->add_option("--out", vg_fmt)->check(CLI::IsMember({"json", "csv"}));
  int vgr_max = 12, vgr_min_max = 12;
  std::string vgr_fmt = "json";
  v_greedy->add_option("--n-max", vgr_max)->check(CLI::Range(2, 64));
  v_greedy->add_option("--minimality-max", vgr_min_max, "largest n for the minimality check")->check(CLI::Range(0, 64));
  v_greedy->add_option("--out", vgr_fmt)->check(CLI::IsMember({"json", "csv"}));
  std::uint64_t seed = 1;
  int vo_count = 200, vo_nmax = 40;
  v_oracles->add_option("--seed", seed);
  v_oracles->add_option("--count", vo_count)->check(CLI::Range(1, 1000000));
  v_oracles->add_option("--n-max", vo_nmax)->check(CLI::Range(1, 62));

  // greedy
  auto* greedy = app.add_subcommand("greedy", "print the greedy tree of a degree sequence");
  std::string degrees_text;
  std::string greedy_fmt = "g6";
  greedy->add_option("--degrees", degrees_text, "comma-separated degrees, e.g. 3,2,2,1,1,1")->required();
  greedy->add_option("--out", greedy_fmt)->check(CLI::IsMember({"g6", "edges", "parent", "json"}));

  // construct
  auto* construct = app.add_subcommand("construct", "extremal constructions");
  construct->require_subcommand(1);
  std::string construct_fmt = "g6";
  construct->add_option("--out", construct_fmt)->check(CLI::IsMember({"g6", "edges", "json"}));
  auto* c_chain = construct->add_subcommand("chain", "chained near-regular blocks");
  auto* c_block = construct->add_subcommand("block", "near-regular block G_r of even order k");
  auto* c_side = construct->add_subcommand("side", "odd-order side block");
  auto* c_quad = construct->add_subcommand("quadratic", "path joined to K_{n/2} minus an edge");
  int ck = 10, cs = 0, cr = 4, cn = 11;
  bool codd = false;
  for (auto* sc : {c_chain, c_block, c_side, c_quad})
    sc->add_option("--out", construct_fmt)->check(CLI::IsMember({"g6", "edges", "json"}));
  c_chain->add_option("--k", ck)->required();
  c_chain->add_option("--s", cs);
  c_chain->add_flag("--odd", codd, "odd-order variant");
  c_block->add_option("--k", ck)->required();
  c_block->add_option("--r", cr)->required();
  c_side->add_option("--n", cn, "odd order")->required();
  c_side->add_option("--r", cr, "target degree")->required();
  c_quad->add_option("--n", cn)->required();

  // ratio-scan
  auto* rscan = app.add_subcommand("ratio-scan", "sigma_t/sigma along the extremal chain");
  std::string k_list = "10,12,14,16,18,20,22,24,26";
  int rs = 0;
  std::string rs_fmt = "json";
  rscan->add_option("--k", k_list, "comma-separated even k >= 10");
  rscan->add_option("--s", rs)->check(CLI::Range(0, 1000));
  rscan->add_option("--out", rs_fmt)->check(CLI::IsMember({"json", "csv"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate structures");
  enumerate->require_subcommand(1);
  auto* e_trees = enumerate->add_subcommand("trees", "all free trees of order n");
  int en = 6;
  std::string e_fmt = "g6";
  e_trees->add_option("--n", en)->required()->check(CLI::Range(1, 64));
  e_trees->add_option("--out", e_fmt)->check(CLI::IsMember({"g6", "edges", "parent"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Caps caps;
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (const char* env = std::getenv("IRRLAB_CAP")) caps.apply_override(env);
    if (unsafe_cap > 0) caps.trees = caps.labeled = unsafe_cap;

    if (measure->parsed()) {
      std::vector<Graph> graphs;
      if (in_path == "-") {
        graphs = read_graphs(std::cin);
      } else {
        std::ifstream f(in_path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open '" + in_path + "'");
        graphs = read_graphs(f);
      }
      if (measure_fmt == "csv") out << kMeasureCsvHeader << '\n';
      for (const auto& g : graphs) {
        const MeasureReport r = measure_all(g);
        if (measure_fmt == "csv") out << to_csv_row(r) << '\n';
        else out << to_json(r).dump() << '\n';
      }
    } else if (v_trees->parsed()) {
      if (vt_min > vt_max) throw Error(ErrorKind::InvalidArgument, "--n-min exceeds --n-max");
      code = detail::report_scan(exhaustive_tree_scan(vt_min, vt_max, jobs, caps.trees), vt_fmt, out, err);
    } else if (v_graphs->parsed()) {
      if (vg_min > vg_max) throw Error(ErrorKind::InvalidArgument, "--n-min exceeds --n-max");
      code = detail::report_scan(exhaustive_graph_scan(vg_min, vg_max, jobs, caps.labeled, caps.exact_path), vg_fmt, out,
                                 err);
    } else if (v_greedy->parsed()) {
      code = detail::report_scan(greedy_scan(vgr_max, vgr_min_max, caps.trees), vgr_fmt, out, err);
    } else if (v_oracles->parsed()) {
      std::mt19937_64 rng(seed);
      std::uint64_t failures = 0;
      for (int i = 0; i < vo_count; ++i) {
        const int n = std::uniform_int_distribution<int>(1, vo_nmax)(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::bernoulli_distribution coin(p);
        std::vector<std::pair<Vertex, Vertex>> e;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (coin(rng)) e.emplace_back(a, b);
        const Graph g = Graph::from_edge_list(static_cast<std::size_t>(n), e);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const MeasureReport m = measure_all(g);
        const DegreeVector d = degrees(g);
        const bool ok = sigma_t_closed_form(d) == sigma_t_pairwise(d) && parse_graph6(write_graph6(g)) == g &&
                        measure_all(relabel(g, perm)) == m && m.sigma <= m.sigma_t && m.irr <= m.sigma &&
                        Rational::make(m.sigma_t, m.n * m.n) == m.variance();
        if (!ok) {
          ++failures;
          err << "witness oracle " << write_graph6(g) << '\n';
        }
      }
      out << Json{{"scan", "oracles"}, {"seed", seed}, {"count", vo_count}, {"total_violations", failures}}.dump(2)
          << '\n';
      code = failures == 0 ? kExitOk : kExitViolation;
    } else if (greedy->parsed()) {
      const RootedTree t = greedy_tree(DegreeSequence{detail::parse_int_list(degrees_text)});
      if (greedy_fmt == "parent") {
        out << t.parent_line() << '\n';
      } else if (greedy_fmt == "json") {
        Json g = Json::array();
        for (auto v : subtree_g_values(t)) g.push_back(v);
        out << Json{{"graph6", write_graph6(t.to_graph())}, {"parent", t.parent_line()}, {"degrees", t.degree}, {"g", g}}
                   .dump(2)
            << '\n';
      } else {
        detail::emit_graph(out, t.to_graph(), greedy_fmt);
      }
    } else if (construct->parsed()) {
      Graph g;
      Json manifest;
      if (c_chain->parsed()) {
        const ChainGraph c = extremal_chain({ck, cs, codd});
        g = c.graph;
        manifest = c.manifest();
      } else if (c_block->parsed()) {
        g = near_regular_block(ck, cr);
        manifest = {{"block", "near_regular"}, {"k", ck}, {"r", cr}, {"deficient_vertex", ck - 1}};
      } else if (c_side->parsed()) {
        g = side_block(cn, cr);
        manifest = {{"block", "side"}, {"order", cn}, {"degree", cr}, {"deficient_vertex", 0}};
      } else {
        g = quadratic_example(cn);
        manifest = {{"block", "quadratic"}, {"n", cn}};
      }
      if (construct_fmt == "json") {
        manifest["graph6"] = write_graph6(g);
        out << manifest.dump(2) << '\n';
      } else {
        detail::emit_graph(out, g, construct_fmt);
      }
    } else if (rscan->parsed()) {
      const RatioScan scan = ratio_scan(detail::parse_int_list(k_list), rs);
      if (rs_fmt == "csv") out << scan.to_csv();
      else out << scan.to_json().dump(2) << '\n';
      if (!scan.sigma_matches()) code = kExitViolation;
    } else if (e_trees->parsed()) {
      for_each_free_tree(
          en,
          [&](const Graph& t) {
            if (e_fmt == "parent") out << root_tree(t, 0).parent_line() << '\n';
            else detail::emit_graph(out, t, e_fmt);
          },
          caps.trees);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "elapsed " << dt.count() << " s\n";
  }
  return code;
}

}  // namespace irrlab::cli
