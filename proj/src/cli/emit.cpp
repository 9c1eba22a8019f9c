#include "mlsp/emit.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace mlsp {

using nlohmann::json;

std::string format_number(double value) {
  if (!is_reachable(value)) return "inf";
  return format_weight(value);
}

namespace {

json number_or_null(double value) {
  if (!is_reachable(value)) return nullptr;
  return value;
}

json stats_json(const PathStats& s) {
  return json{{"source", s.source.value},     {"alpha", s.alpha},
              {"beta", s.beta},               {"num_routes", s.num_routes},
              {"avg_len", s.avg_len},         {"min_len", s.min_len},
              {"max_len", s.max_len},         {"avg_handshakes", s.avg_handshakes},
              {"num_neighbors", s.num_neighbors}, {"pct_connected", s.pct_connected}};
}

std::string path_text(const std::vector<NodeId>& path) {
  std::string text;
  for (NodeId v : path) {
    if (!text.empty()) text += ' ';
    text += std::to_string(v.value);
  }
  return text;
}

json timing_json(const PhaseTiming& t) {
  return json{{"phase", t.name},
              {"median_ms", t.median_ms},
              {"min_ms", t.min_ms},
              {"max_ms", t.max_ms},
              {"samples_ms", t.samples_ms}};
}

}  // namespace

void emit_summary(const NetworkSummary& summary, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    json layers = json::array();
    for (std::size_t l = 0; l < summary.layer_labels.size(); ++l) {
      layers.push_back({{"index", l}, {"label", summary.layer_labels[l]}, {"edges", summary.layer_edges[l]}});
    }
    out << json{{"nodes", summary.nodes},
                {"layers", summary.layer_labels.size()},
                {"edges", summary.edges},
                {"pairs", summary.pairs},
                {"per_layer", layers}}
               .dump(2)
        << '\n';
    return;
  }
  out << "metric,value\n"
      << "nodes," << summary.nodes << '\n'
      << "layers," << summary.layer_labels.size() << '\n'
      << "edges," << summary.edges << '\n'
      << "pairs," << summary.pairs << '\n';
  for (std::size_t l = 0; l < summary.layer_labels.size(); ++l) {
    out << "layer:" << summary.layer_labels[l] << ',' << summary.layer_edges[l] << '\n';
  }
}

std::string summary_line(const NetworkSummary& summary) {
  std::string line = std::to_string(summary.nodes) + " nodes, " +
                     std::to_string(summary.layer_labels.size()) + " layers, " +
                     std::to_string(summary.edges) + " edges (";
  for (std::size_t l = 0; l < summary.layer_labels.size(); ++l) {
    if (l) line += ", ";
    line += summary.layer_labels[l] + ": " + std::to_string(summary.layer_edges[l]);
  }
  return line + ")";
}

void emit_stats(std::span<const PathStats> rows, std::span<const ShortestPathResult> paths,
                OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    json doc{{"stats", json::array()}};
    for (const auto& s : rows) doc["stats"].push_back(stats_json(s));
    if (!paths.empty()) {
      doc["paths"] = json::array();
      for (const auto& r : paths) {
        const std::vector<int> hops = hop_counts(r);
        for (NodeIndex v = 0; v < r.node_count(); ++v) {
          const NodeId target = (*r.nodes)[v];
          doc["paths"].push_back({{"source", r.source.value},
                                  {"alpha", r.params.alpha},
                                  {"beta", r.params.beta},
                                  {"target", target.value},
                                  {"length", number_or_null(r.lengths[v])},
                                  {"hops", hops[v] < 0 ? json(nullptr) : json(hops[v])},
                                  {"path", path_text(reconstruct_path(r, target))}});
        }
      }
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << kStatsHeader << '\n';
  for (const auto& s : rows) {
    out << s.source.value << ',' << s.alpha << ',' << format_number(s.beta) << ',' << s.num_routes
        << ',' << format_number(s.avg_len) << ',' << format_number(s.min_len) << ','
        << format_number(s.max_len) << ',' << format_number(s.avg_handshakes) << ','
        << s.num_neighbors << ',' << format_number(s.pct_connected) << '\n';
  }
  if (paths.empty()) return;
  out << '\n' << kPathsHeader << '\n';
  for (const auto& r : paths) {
    const std::vector<int> hops = hop_counts(r);
    for (NodeIndex v = 0; v < r.node_count(); ++v) {
      const NodeId target = (*r.nodes)[v];
      out << r.source.value << ',' << r.params.alpha << ',' << format_number(r.params.beta) << ','
          << target.value << ',' << format_number(r.lengths[v]) << ','
          << (hops[v] < 0 ? std::string() : std::to_string(hops[v])) << ','
          << path_text(reconstruct_path(r, target)) << '\n';
    }
  }
}

void emit_matrix(const DistanceMatrix& matrix, OutputFormat format, std::ostream& out) {
  const auto& nodes = *matrix.nodes;
  if (format == OutputFormat::kJson) {
    json ids = json::array();
    for (NodeId v : nodes) ids.push_back(v.value);
    json rows = json::array();
    for (NodeIndex i = 0; i < matrix.size; ++i) {
      json row = json::array();
      for (double d : matrix.row(i)) row.push_back(number_or_null(d));
      rows.push_back(std::move(row));
    }
    out << json{{"nodes", ids}, {"values", rows}}.dump() << '\n';
    return;
  }
  out << "src";
  for (NodeId v : nodes) out << ',' << v.value;
  out << '\n';
  for (NodeIndex i = 0; i < matrix.size; ++i) {
    out << nodes[i].value;
    for (double d : matrix.row(i)) out << ',' << format_number(d);
    out << '\n';
  }
}

void emit_sweep(const SweepReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
      json entry{{"alpha", cell.alpha}, {"beta", cell.beta}, {"edge_count", cell.edge_count}};
      if (!cell.stats.empty()) {
        entry["stats"] = json::array();
        for (const auto& s : cell.stats) entry["stats"].push_back(stats_json(s));
      }
      cells.push_back(std::move(entry));
    }
    out << json{{"mode", std::string(to_string(report.mode))}, {"cells", cells}}.dump(2) << '\n';
    return;
  }
  out << kSweepHeader << '\n';
  for (const auto& cell : report.cells) {
    out << cell.alpha << ',' << format_number(cell.beta) << ',' << cell.edge_count << '\n';
  }
  std::vector<PathStats> rows;
  for (const auto& cell : report.cells) rows.insert(rows.end(), cell.stats.begin(), cell.stats.end());
  if (rows.empty()) return;
  out << '\n';
  emit_stats(rows, {}, OutputFormat::kCsv, out);
}

void emit_aggregated(const AggregatedGraph& graph, OutputFormat format, std::ostream& out) {
  const auto& nodes = *graph.node_table();
  if (format == OutputFormat::kJson) {
    json edges = json::array();
    for (NodeIndex x = 0; x < graph.node_count(); ++x) {
      for (auto e = graph.edge_begin(x); e < graph.edge_end(x); ++e) {
        edges.push_back({{"src", nodes[x].value},
                         {"dst", nodes[graph.target(e)].value},
                         {"distance", graph.distance(e)},
                         {"layer_count", graph.layer_count(e)}});
      }
    }
    out << json{{"alpha", graph.params().alpha},
                {"beta", graph.params().beta},
                {"mode", std::string(to_string(graph.params().mode))},
                {"edges", edges}}
               .dump(2)
        << '\n';
    return;
  }
  out << kAggregatedHeader << '\n';
  for (NodeIndex x = 0; x < graph.node_count(); ++x) {
    for (auto e = graph.edge_begin(x); e < graph.edge_end(x); ++e) {
      out << nodes[x].value << ',' << nodes[graph.target(e)].value << ','
          << format_number(graph.distance(e)) << ',' << graph.layer_count(e) << '\n';
    }
  }
}

void emit_bench(const BenchReport& report, OutputFormat format, std::ostream& out) {
  const PhaseTiming* phases[] = {&report.dap_aggregate, &report.dap_search, &report.dap_total,
                                 &report.mda_total};
  if (format == OutputFormat::kJson) {
    json timings = json::array();
    for (const auto* t : phases) timings.push_back(timing_json(*t));
    json workloads = json::array();
    for (const auto& w : report.workloads) {
      workloads.push_back({{"alpha", w.alpha}, {"beta", w.beta}, {"mode", std::string(to_string(w.mode))}});
    }
    json sources = json::array();
    for (NodeId s : report.sources) sources.push_back(s.value);
    out << json{{"nodes", report.nodes},
                {"edges", report.edges},
                {"repetitions", report.repetitions},
                {"sources", sources},
                {"workloads", workloads},
                {"phases", timings},
                {"mda_overhead_pct", report.mda_overhead_pct},
                {"results_agree", report.results_agree}}
               .dump(2)
        << '\n';
    return;
  }
  auto fixed = [](double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", v);
    return std::string(buffer);
  };
  out << kBenchHeader << '\n';
  for (const auto* t : phases) {
    out << t->name << ',' << fixed(t->median_ms) << ',' << fixed(t->min_ms) << ','
        << fixed(t->max_ms) << '\n';
  }
  out << "mda_overhead_pct," << fixed(report.mda_overhead_pct) << ",,\n"
      << "results_agree," << (report.results_agree ? "yes" : "no") << ",,\n";
}

}  // namespace mlsp
