#include "mlsp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mlsp/analytics.hpp"
#include "mlsp/bench.hpp"
#include "mlsp/edge_list.hpp"
#include "mlsp/emit.hpp"
#include "mlsp/generator.hpp"
#include "mlsp/shortest_path.hpp"

namespace mlsp::cli {

namespace {

struct Config {
  std::string input;
  std::string output;
  std::string polarity = "positive";
  std::string on_duplicate = "error";
  std::string format = "csv";
  std::string mode = "combined";
  int alpha = 1;
  double beta = 1.0;
  std::vector<int> alphas;
  std::vector<double> betas;
  std::vector<std::uint64_t> sources;
  unsigned jobs = 1;
  std::size_t max_nodes = 2000;
  bool paths = false;
  std::string algorithm = "mda";
  std::string strategy = "floyd-warshall";
  int repetitions = 5;
  // generate
  std::size_t gen_nodes = 100;
  std::size_t gen_layers = 3;
  double gen_density = 0.05;
  std::uint64_t gen_seed = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat output_format(const Config& c) {
  return c.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
}

AggregationMode aggregation_mode(const Config& c) { return parse_aggregation_mode(c.mode); }

std::vector<int> alpha_grid(const Config& c) { return c.alphas.empty() ? std::vector{c.alpha} : c.alphas; }
std::vector<double> beta_grid(const Config& c) { return c.betas.empty() ? std::vector{c.beta} : c.betas; }

std::vector<AggregationParams> param_grid(const Config& c) {
  std::vector<AggregationParams> grid;
  for (int a : alpha_grid(c)) {
    for (double b : beta_grid(c)) grid.push_back({a, b, aggregation_mode(c)});
  }
  return grid;
}

MultiLayeredNetwork load(const Config& c, std::ostream& err) {
  LoadOptions options;
  options.polarity = c.polarity == "negative" ? Polarity::kNegative : Polarity::kPositive;
  options.on_duplicate =
      c.on_duplicate == "keep-max" ? DuplicatePolicy::kKeepMax : DuplicatePolicy::kError;
  MultiLayeredNetwork net = load_edge_list(c.input, options);
  err << "loaded " << summary_line(summarize(net)) << '\n';
  return net;
}

std::vector<NodeId> resolve_sources(const Config& c, const MultiLayeredNetwork& net) {
  std::vector<NodeId> out;
  for (auto v : c.sources) {
    if (!net.find_index(NodeId{v})) {
      throw UsageError("unknown source node " + std::to_string(v));
    }
    out.push_back(NodeId{v});
  }
  return out;
}

// Writes to --output when given, otherwise to `out`.
template <class Fn>
void with_output(const Config& c, std::ostream& out, Fn&& fn) {
  if (c.output.empty() || c.output == "-") {
    fn(out);
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + c.output + "'");
  fn(file);
}

void cmd_load_summary(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  emit_summary(summarize(net), output_format(c), out);
}

void cmd_sssp(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  const auto sources = resolve_sources(c, net);
  if (sources.empty()) throw UsageError("sssp needs --source");
  const auto grid = param_grid(c);
  for (const auto& p : grid) p.validate();
  std::vector<PathStats> rows;
  std::vector<ShortestPathResult> results;
  for (NodeId s : sources) {
    for (const auto& params : grid) {
      ShortestPathResult r =
          c.algorithm == "dap" ? dap_sssp(net, s, params) : mda_sssp(net, s, params);
      rows.push_back(path_stats(r, net, params));
      if (c.paths) results.push_back(std::move(r));
    }
  }
  with_output(c, out, [&](std::ostream& o) { emit_stats(rows, results, output_format(c), o); });
}

void cmd_apsp(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  const AggregationParams params{c.alpha, c.beta, aggregation_mode(c)};
  params.validate();
  const ApspOptions options{c.max_nodes, c.jobs};
  DistanceMatrix matrix;
  if (c.strategy == "repeated-dijkstra") {
    matrix = repeated_dijkstra_apsp(net, params, options);
  } else {
    matrix = ml_floyd_warshall(net, params, options);
    if (c.strategy == "both") {
      const DistanceMatrix check = repeated_dijkstra_apsp(net, params, options);
      for (std::size_t k = 0; k < matrix.values.size(); ++k) {
        const double a = matrix.values[k], b = check.values[k];
        const bool same = is_reachable(a) == is_reachable(b) &&
                          (!is_reachable(a) || std::abs(a - b) <= 1e-12);
        if (!same) throw std::runtime_error("floyd-warshall and repeated dijkstra disagree");
      }
      err << "floyd-warshall and repeated-dijkstra agree on all " << matrix.values.size()
          << " entries\n";
    }
  }
  with_output(c, out, [&](std::ostream& o) { emit_matrix(matrix, output_format(c), o); });
}

void cmd_sweep(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  if (c.alphas.empty() || c.betas.empty()) throw UsageError("sweep needs --alphas and --betas");
  SweepOptions options;
  options.mode = aggregation_mode(c);
  options.sources = resolve_sources(c, net);
  options.jobs = c.jobs;
  const SweepReport report = edge_count_sweep(net, c.alphas, c.betas, options);
  with_output(c, out, [&](std::ostream& o) { emit_sweep(report, output_format(c), o); });
}

void cmd_bench(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  if (c.repetitions < 3) throw UsageError("--repetitions must be at least 3");
  BenchOptions options;
  options.sources = resolve_sources(c, net);
  options.workloads = param_grid(c);
  options.repetitions = c.repetitions;
  for (const auto& p : options.workloads) p.validate();
  const BenchReport report = run_bench(net, options);
  with_output(c, out, [&](std::ostream& o) { emit_bench(report, output_format(c), o); });
}

void cmd_generate(const Config& c, std::ostream& out, std::ostream& err) {
  GeneratorParams params;
  params.nodes = c.gen_nodes;
  params.layers = c.gen_layers;
  params.density = c.gen_density;
  params.seed = c.gen_seed;
  const auto net = generate_network(
      params, c.polarity == "negative" ? Polarity::kNegative : Polarity::kPositive);
  err << "generated " << summary_line(summarize(net)) << '\n';
  with_output(c, out, [&](std::ostream& o) { write_edge_list(net, o); });
}

void cmd_aggregate_export(const Config& c, std::ostream& out, std::ostream& err) {
  const auto net = load(c, err);
  const AggregationParams params{c.alpha, c.beta, aggregation_mode(c)};
  const AggregatedGraph graph = aggregate_graph(net, params);
  with_output(c, out, [&](std::ostream& o) { emit_aggregated(graph, output_format(c), o); });
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kEmptyFile:
    case ErrorCode::kLoopEdge:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kWeightOutOfRange:
    case ErrorCode::kTooManyLayers:
    case ErrorCode::kIo:
      return kExitInput;
    case ErrorCode::kUnknownNode:
    case ErrorCode::kUnknownLayer:
    case ErrorCode::kInvalidAlpha:
    case ErrorCode::kInvalidBeta:
    case ErrorCode::kSameNode:
      return kExitUsage;
    case ErrorCode::kSizeGuardExceeded:
      return kExitGuard;
    case ErrorCode::kInconsistentInput:
      return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Shortest paths in multi-layered networks", "mlsp"};
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"csv", "json"});
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", c.input, "Edge list CSV (src,dst,layer,weight)")->required();
    cmd->add_option("--polarity", c.polarity, "Weight polarity")
        ->check(CLI::IsMember({"positive", "negative"}));
    cmd->add_option("--on-duplicate", c.on_duplicate, "Duplicate (src,dst,layer) handling")
        ->check(CLI::IsMember({"error", "keep-max"}));
    cmd->add_option("--format", c.format, "Output format")->check(formats);
    cmd->add_option("-o,--output", c.output, "Write results to this file");
  };
  auto add_thresholds = [&](CLI::App* cmd, bool grids) {
    cmd->add_option("--alpha", c.alpha, "Minimum layer count");
    cmd->add_option("--beta", c.beta, "Maximum distance");
    cmd->add_option("--mode", c.mode, "Which thresholds apply")
        ->check(CLI::IsMember({"combined", "layers", "distance"}));
    if (grids) {
      cmd->add_option("--alphas", c.alphas, "Alpha grid (comma separated)")->delimiter(',');
      cmd->add_option("--betas", c.betas, "Beta grid (comma separated)")->delimiter(',');
    }
  };

  auto* summary = app.add_subcommand("load-summary", "Load an edge list and print its shape");
  add_input(summary);

  auto* sssp = app.add_subcommand("sssp", "Single-source shortest paths and path statistics");
  add_input(sssp);
  add_thresholds(sssp, true);
  sssp->add_option("--source", c.sources, "Source node id(s)")->delimiter(',');
  sssp->add_option("--algorithm", c.algorithm, "Search strategy")
      ->check(CLI::IsMember({"dap", "mda"}));
  sssp->add_flag("--paths", c.paths, "Also dump every shortest path");

  auto* apsp = app.add_subcommand("apsp", "All-pairs shortest path lengths");
  add_input(apsp);
  add_thresholds(apsp, false);
  apsp->add_option("--strategy", c.strategy, "All-pairs strategy")
      ->check(CLI::IsMember({"floyd-warshall", "repeated-dijkstra", "both"}));
  apsp->add_option("--max-nodes", c.max_nodes, "Refuse networks larger than this");
  apsp->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");

  auto* sweep = app.add_subcommand("sweep", "Aggregated edge counts over an alpha x beta grid");
  add_input(sweep);
  add_thresholds(sweep, true);
  sweep->add_option("--source", c.sources, "Also compute path statistics for these sources")
      ->delimiter(',');
  sweep->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");

  auto* bench = app.add_subcommand("bench", "Time DAP against MDA");
  add_input(bench);
  add_thresholds(bench, true);
  bench->add_option("--source", c.sources, "Source node id(s)")->delimiter(',');
  bench->add_option("--repetitions", c.repetitions, "Timed repetitions (>= 3)");

  auto* generate = app.add_subcommand("generate", "Write a random multi-layered edge list");
  generate->add_option("--nodes", c.gen_nodes, "Node count")->check(CLI::PositiveNumber);
  generate->add_option("--layers", c.gen_layers, "Layer count")->check(CLI::Range(1, 64));
  generate->add_option("--density", c.gen_density, "Per-layer edge probability")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", c.gen_seed, "Random seed");
  generate->add_option("--polarity", c.polarity, "Weight polarity")
      ->check(CLI::IsMember({"positive", "negative"}));
  generate->add_option("-o,--output", c.output, "Write the edge list to this file");

  auto* aggregate = app.add_subcommand("aggregate-export", "Write the aggregated graph");
  add_input(aggregate);
  add_thresholds(aggregate, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (summary->parsed()) cmd_load_summary(c, out, err);
    if (sssp->parsed()) cmd_sssp(c, out, err);
    if (apsp->parsed()) cmd_apsp(c, out, err);
    if (sweep->parsed()) cmd_sweep(c, out, err);
    if (bench->parsed()) cmd_bench(c, out, err);
    if (generate->parsed()) cmd_generate(c, out, err);
    if (aggregate->parsed()) cmd_aggregate_export(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace mlsp::cli
