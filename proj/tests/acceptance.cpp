// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mlsp/analytics.hpp"
#include "mlsp/bench.hpp"
#include "mlsp/cli.hpp"
#include "mlsp/edge_list.hpp"
#include "mlsp/generator.hpp"
#include "mlsp/shortest_path.hpp"
#include "test_support.hpp"

namespace {

using namespace mlsp;
using mlsp::testing::RawNetwork;
using mlsp::testing::same_length;

constexpr double kPathTol = 1e-12;
constexpr double kDistanceTol = 1e-15;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first mismatch and keeps counting checks.
struct Checker {
  std::size_t checks = 0;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

std::string fmt(const char* pattern, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

RawNetwork raw_network(std::size_t nodes, std::size_t layers, double density, std::uint64_t seed) {
  GeneratorParams p;
  p.nodes = nodes;
  p.layers = layers;
  p.density = density;
  p.seed = seed;
  return RawNetwork{nodes, layers, generate_edges(p)};
}

bool same_reach_and_lengths(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_length(a[i], b[i], kPathTol)) return false;
  }
  return true;
}

// 1. DAP and MDA agree on 200 generated networks for every source and every
//    (alpha, beta) in {1,2,3} x {0.25,0.5,0.75,1.0}.
Outcome dap_mda_equivalence() {
  const std::size_t sizes[] = {20, 100, 200};
  const double betas[] = {0.25, 0.5, 0.75, 1.0};
  Checker check;
  for (int n = 0; n < 200; ++n) {
    const auto raw = raw_network(sizes[n % 3], 3, 0.05, 1000 + n);
    const auto net = mlsp::testing::seal(raw);
    for (int alpha = 1; alpha <= 3; ++alpha) {
      for (double beta : betas) {
        const AggregationParams params{alpha, beta};
        const AggregatedGraph graph = aggregate_graph(net, params);
        // dap_sssp is aggregate_graph followed by dijkstra; pin that once per cell.
        check.expect(dap_sssp(net, net.id_of(0), params).lengths == dijkstra(graph, 0).lengths,
                     fmt("network %d: dap_sssp differs from its own phases", n));
        for (NodeIndex s = 0; s < net.node_count(); ++s) {
          const auto dap = dijkstra(graph, s);
          const auto mda = mda_sssp(net, net.id_of(s), params);
          check.expect(same_reach_and_lengths(dap.lengths, mda.lengths),
                       fmt("network %d source %u alpha %d beta %.3f", n, s, alpha, beta));
        }
      }
    }
  }
  return {check.ok(), check.ok() ? fmt("%zu source/threshold runs identical", check.checks)
                                 : check.first_failure};
}

// 2. DAP matches exhaustive simple-path enumeration on 500 networks with
//    |V| <= 7 and |L| <= 3, for all sources and thresholds.
Outcome brute_force_oracle() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  const double betas[] = {0.0, 0.25, 0.5, 0.667, 0.75, 0.875, 1.0};
  const double inf = std::numeric_limits<double>::infinity();
  Checker check;
  for (int n = 0; n < 500; ++n) {
    const std::size_t nodes = 1 + rng() % 7;
    const std::size_t layers = 1 + rng() % 3;
    const auto raw = raw_network(nodes, layers, density(rng), rng());
    const auto net = mlsp::testing::seal(raw);
    for (int alpha = 1; alpha <= static_cast<int>(layers) + 1; ++alpha) {
      for (double beta : betas) {
        for (auto mode : {AggregationMode::kCombined, AggregationMode::kLayersOnly,
                          AggregationMode::kDistanceOnly}) {
          const AggregationParams params{alpha, beta, mode};
          const auto adj = mlsp::testing::oracle_adjacency(
              raw, mode == AggregationMode::kDistanceOnly ? 1 : alpha,
              mode == AggregationMode::kLayersOnly ? inf : beta);
          for (NodeIndex s = 0; s < net.node_count(); ++s) {
            const auto dap = dap_sssp(net, net.id_of(s), params);
            const auto oracle = mlsp::testing::oracle_enumerate(adj, s);
            const auto brute = brute_force_sp(net, net.id_of(s), params);
            check.expect(same_reach_and_lengths(dap.lengths, oracle),
                         fmt("network %d source %u alpha %d beta %.3f mode %d (oracle)", n, s,
                             alpha, beta, static_cast<int>(mode)));
            check.expect(same_reach_and_lengths(dap.lengths, brute.lengths),
                         fmt("network %d source %u (brute_force_sp)", n, s));
          }
        }
      }
    }
  }
  return {check.ok(), check.ok() ? fmt("%zu comparisons agree", check.checks) : check.first_failure};
}

// 3. One layer, alpha = 1, beta = 1: DAP equals textbook Dijkstra on 1 - w,
//    exactly.
Outcome single_layer_reduction() {
  std::mt19937_64 rng(77);
  Checker check;
  for (int n = 0; n < 50; ++n) {
    const std::size_t nodes = 10 + rng() % 140;
    const double density = 2.0 / static_cast<double>(nodes) + 0.02 * static_cast<double>(rng() % 4);
    const auto raw = raw_network(nodes, 1, std::min(density, 1.0), rng());
    const auto net = mlsp::testing::seal(raw);
    for (NodeIndex s = 0; s < net.node_count(); ++s) {
      const auto dap = dap_sssp(net, net.id_of(s), {1, 1.0});
      check.expect(dap.lengths == mlsp::testing::textbook_dijkstra(raw, s),
                   fmt("network %d source %u", n, s));
    }
  }
  return {check.ok(), check.ok() ? fmt("%zu sources exactly equal", check.checks) : check.first_failure};
}

// 4. Floyd–Warshall equals repeated DAP on 20 networks with |V| <= 100.
Outcome apsp_consistency() {
  const AggregationParams grid[] = {{1, 1.0}, {2, 1.0}, {1, 0.8}, {2, 0.9}};
  Checker check;
  std::size_t entries = 0;
  for (int n = 0; n < 20; ++n) {
    const std::size_t nodes = 10 + static_cast<std::size_t>(n) * 90 / 19;
    const auto net = mlsp::testing::seal(raw_network(nodes, 3, 0.06, 500 + n));
    for (const auto& params : grid) {
      const auto matrix = ml_floyd_warshall(net, params);
      for (NodeIndex i = 0; i < net.node_count(); ++i) {
        const auto row = dap_sssp(net, net.id_of(i), params);
        for (NodeIndex j = 0; j < net.node_count(); ++j) {
          ++entries;
          check.expect(same_length(matrix.at(i, j), row.lengths[j], kPathTol),
                       fmt("network %d entry (%u, %u)", n, i, j));
        }
      }
    }
  }
  return {check.ok(), check.ok() ? fmt("%zu matrix entries equal", entries) : check.first_failure};
}

// 5. Stricter thresholds never add edges, never grow reachable sets, and
//    never shorten a finite shortest path.
Outcome threshold_monotonicity() {
  const std::vector<int> alphas{1, 2, 3};
  const std::vector<double> betas{1.0, 0.975, 0.875, 0.667, 0.5, 0.333};
  Checker check;
  for (int n = 0; n < 20; ++n) {
    const auto net = mlsp::testing::seal(raw_network(80, 3, 0.05, 900 + n));
    const auto sweep = edge_count_sweep(net, alphas, betas);
    std::vector<std::vector<std::vector<double>>> lengths(alphas.size() * betas.size());
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      for (std::size_t b = 0; b < betas.size(); ++b) {
        const AggregationParams params{alphas[a], betas[b]};
        const auto graph = aggregate_graph(net, params);
        check.expect(sweep.cell(a, b).edge_count == graph.edge_count(), "sweep count mismatch");
        for (NodeIndex s = 0; s < net.node_count(); ++s) {
          lengths[a * betas.size() + b].push_back(dijkstra(graph, s).lengths);
        }
      }
    }
    auto stricter = [&](std::size_t loose, std::size_t strict) {
      check.expect(sweep.cells[strict].edge_count <= sweep.cells[loose].edge_count,
                   fmt("network %d: edge count grew", n));
      for (NodeIndex s = 0; s < net.node_count(); ++s) {
        const auto& lo = lengths[loose][s];
        const auto& st = lengths[strict][s];
        std::size_t reach_lo = 0, reach_st = 0;
        for (NodeIndex v = 0; v < net.node_count(); ++v) {
          reach_lo += is_reachable(lo[v]);
          reach_st += is_reachable(st[v]);
          if (is_reachable(st[v])) {
            check.expect(is_reachable(lo[v]) && st[v] >= lo[v],
                         fmt("network %d source %u target %u: stricter path shorter", n, s, v));
          }
        }
        check.expect(reach_st <= reach_lo, fmt("network %d source %u: reachable set grew", n, s));
      }
    };
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      for (std::size_t b = 0; b < betas.size(); ++b) {
        const std::size_t here = a * betas.size() + b;
        if (a + 1 < alphas.size()) stricter(here, here + betas.size());
        if (b + 1 < betas.size()) stricter(here, here + 1);
      }
    }
  }
  return {check.ok(), check.ok() ? fmt("%zu monotonicity checks", check.checks) : check.first_failure};
}

// 6. Distance formula spot checks.
Outcome distance_spot_checks() {
  NetworkBuilder b(3);
  const NodeId x{1}, y{2}, z{3};
  b.add_edge({x, y, LayerId{0}, 0.8});
  b.add_edge({x, y, LayerId{1}, 0.5});
  for (std::uint32_t l = 0; l < 3; ++l) b.add_edge({y, z, LayerId{l}, 1.0});
  const auto net = std::move(b).seal();
  const double partial = distance(net, x, y);
  const double none = distance(net, x, z);
  const double full = distance(net, y, z);
  const bool ok = std::abs(partial - 17.0 / 30.0) <= kDistanceTol && none == 1.0 && full == 0.0;
  return {ok, fmt("d(0.8,0.5,-) = %.17g, no edges = %g, all ones = %g", partial, none, full)};
}

// 7. Benchmark on a generated 10k-node network reports both phases.
Outcome benchmark_report() {
  GeneratorParams g;
  g.nodes = 10000;
  g.layers = 3;
  g.density = 8.0 / 9999.0;
  g.seed = 10000;
  const auto net = generate_network(g);
  BenchOptions options;
  options.repetitions = 3;
  options.workloads = {{1, 1.0}, {2, 1.0}, {1, 0.9}};
  const BenchReport report = run_bench(net, options);

  Checker check;
  for (const auto* phase : {&report.dap_aggregate, &report.dap_search, &report.dap_total,
                            &report.mda_total}) {
    check.expect(phase->samples_ms.size() == 3, phase->name + " missing samples");
    check.expect(phase->min_ms <= phase->median_ms && phase->median_ms <= phase->max_ms,
                 phase->name + " median outside spread");
  }
  for (std::size_t r = 0; r < report.dap_total.samples_ms.size(); ++r) {
    const double agg = report.dap_aggregate.samples_ms[r];
    check.expect(agg >= 0.0, "negative aggregation time");
    check.expect(std::abs(report.dap_total.samples_ms[r] - agg - report.dap_search.samples_ms[r]) <= 1e-9,
                 "dap total is not aggregate + search");
  }
  check.expect(report.results_agree, "bench runs disagree");

  // Same workload through the command line.
  const auto dir = std::filesystem::temp_directory_path() / "mlsp_acceptance_bench";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "net10k.csv").string();
  save_edge_list(net, path);
  std::ostringstream out, err;
  const int code = cli::run({"bench", path, "--repetitions", "3", "--alphas", "1,2"}, out, err);
  std::filesystem::remove_all(dir);
  check.expect(code == cli::kExitOk, "cli bench failed: " + err.str());
  for (const char* phase : {"dap.aggregate", "dap.search", "dap.total", "mda.total"}) {
    check.expect(out.str().find(phase) != std::string::npos, std::string("cli report lacks ") + phase);
  }
  if (!check.ok()) return {false, check.first_failure};
  return {true, fmt("%zu nodes, %zu edges: DAP %.1f ms (aggregate %.1f + search %.1f), "
                    "MDA %.1f ms, overhead %+.1f%%",
                    report.nodes, report.edges, report.dap_total.median_ms,
                    report.dap_aggregate.median_ms, report.dap_search.median_ms,
                    report.mda_total.median_ms, report.mda_overhead_pct)};
}

// 8. Command-line round trip, error paths, and deterministic output.
Outcome cli_contract() {
  const auto dir = std::filesystem::temp_directory_path() / "mlsp_acceptance_cli";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  };
  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr,
                std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
  };
  Checker check;
  std::string out, err;

  const auto loop = write("loop.csv", "src,dst,layer,weight\n1,2,l1,0.3\n5,5,l1,0.3\n");
  check.expect(run({"load-summary", loop}, nullptr, &err) == cli::kExitInput &&
                   err.find("LoopEdge") != std::string::npos && err.find("line 3") != std::string::npos,
               "loop not rejected with line number");
  const auto dup = write("dup.csv", "src,dst,layer,weight\n1,2,l1,0.7\n1,2,l1,0.9\n");
  check.expect(run({"load-summary", dup}, nullptr, &err) == cli::kExitInput &&
                   err.find("DuplicateEdge") != std::string::npos,
               "duplicate not rejected");
  const auto heavy = write("heavy.csv", "src,dst,layer,weight\n1,2,l1,1.5\n");
  check.expect(run({"load-summary", heavy}, nullptr, &err) == cli::kExitInput &&
                   err.find("WeightOutOfRange") != std::string::npos,
               "weight range not enforced");

  const auto net_path = (dir / "g.csv").string();
  check.expect(run({"generate", "--nodes", "60", "--layers", "3", "--density", "0.08", "--seed", "12",
                    "-o", net_path}) == cli::kExitOk,
               "generate failed");
  check.expect(run({"sssp", net_path, "--source", "999"}) == cli::kExitUsage, "unknown source exit code");
  check.expect(run({"apsp", net_path, "--max-nodes", "10"}) == cli::kExitGuard, "guard exit code");

  // Round trip: load -> export -> load gives the same bytes and weights.
  const auto net = load_edge_list(net_path);
  std::ostringstream exported;
  write_edge_list(net, exported);
  std::ifstream original_file(net_path);
  std::stringstream original;
  original << original_file.rdbuf();
  check.expect(exported.str() == original.str(), "export differs from the generated file");
  std::istringstream reparse(exported.str());
  const auto again = read_edge_list(reparse);
  const auto e1 = net.edges(), e2 = again.edges();
  bool same = e1.size() == e2.size() && net.node_count() == again.node_count();
  for (std::size_t k = 0; same && k < e1.size(); ++k) {
    same = e1[k].src == e2[k].src && e1[k].dst == e2[k].dst && e1[k].layer == e2[k].layer &&
           format_weight(e1[k].weight) == format_weight(e2[k].weight);
  }
  check.expect(same, "round trip changed the network");

  // Determinism and ascending ordering.
  std::string first, second;
  run({"sssp", net_path, "--source", "3,1", "--alphas", "1,2", "--paths"}, &first);
  run({"sssp", net_path, "--source", "3,1", "--alphas", "1,2", "--paths"}, &second);
  check.expect(!first.empty() && first == second, "sssp output not deterministic");
  std::string agg1, agg2;
  run({"aggregate-export", net_path, "--alpha", "1"}, &agg1);
  run({"aggregate-export", net_path, "--alpha", "1", "--format", "csv"}, &agg2);
  check.expect(agg1 == agg2, "aggregate export not deterministic");
  std::istringstream rows(agg1);
  std::string line;
  std::getline(rows, line);
  std::pair<unsigned long, unsigned long> prev{0, 0};
  bool ordered = true, have_prev = false;
  while (std::getline(rows, line)) {
    unsigned long s = 0, d = 0;
    if (std::sscanf(line.c_str(), "%lu,%lu", &s, &d) != 2) ordered = false;
    if (have_prev && !(prev < std::make_pair(s, d))) ordered = false;
    prev = {s, d};
    have_prev = true;
  }
  check.expect(ordered, "aggregate export not in ascending (src, dst) order");
  std::string matrix;
  run({"apsp", net_path}, &matrix);
  check.expect(matrix.rfind("src,0,1,2,", 0) == 0, "matrix columns not in ascending id order");

  std::filesystem::remove_all(dir);
  return {check.ok(), check.ok() ? fmt("%zu CLI checks", check.checks) : check.first_failure};
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 = none
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "DAP/MDA equivalence", dap_mda_equivalence, 120.0},
      {"AC2", "brute-force oracle", brute_force_oracle, 60.0},
      {"AC3", "single-layer reduction", single_layer_reduction, 0.0},
      {"AC4", "APSP consistency", apsp_consistency, 0.0},
      {"AC5", "threshold monotonicity", threshold_monotonicity, 0.0},
      {"AC6", "distance formula", distance_spot_checks, 0.0},
      {"AC7", "benchmark report", benchmark_report, 0.0},
      {"AC8", "CLI round trip and errors", cli_contract, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds > c.time_limit_s) {
      outcome.ok = false;
      outcome.detail += fmt(" (exceeded %.0f s limit)", c.time_limit_s);
    }
    failures += outcome.ok ? 0 : 1;
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << ": "
              << outcome.detail << fmt(" [%.1f s]", seconds) << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
