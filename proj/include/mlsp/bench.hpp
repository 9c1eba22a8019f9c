#pragma once

#include <string>
#include <vector>

#include "mlsp/aggregate.hpp"
#include "mlsp/network.hpp"

namespace mlsp {

struct BenchOptions {
  std::vector<NodeId> sources;  // empty: `default_sources` nodes spread over the id range
  std::size_t default_sources = 8;
  std::vector<AggregationParams> workloads{AggregationParams{}};
  int repetitions = 5;
};

/// Median and spread of one timed phase, in milliseconds.
struct PhaseTiming {
  std::string name;
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
  std::vector<double> samples_ms;
};

struct BenchReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<NodeId> sources;
  std::vector<AggregationParams> workloads;
  int repetitions = 0;
  PhaseTiming dap_aggregate;  // building the aggregated graph
  PhaseTiming dap_search;     // Dijkstra over it
  PhaseTiming dap_total;      // aggregate + search, per repetition
  PhaseTiming mda_total;
  /// (mda - dap) / dap on the total medians, in percent.
  double mda_overhead_pct = 0.0;
  /// Both strategies produced identical lengths on every run.
  bool results_agree = true;
};

/// Times DAP and MDA over identical (source, params) workloads. Throws
/// std::invalid_argument for fewer than 3 repetitions or no workloads.
BenchReport run_bench(const MultiLayeredNetwork& net, const BenchOptions& options);

}  // namespace mlsp
