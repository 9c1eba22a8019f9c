#include "mlsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mlsp/shortest_path.hpp"

namespace mlsp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

PhaseTiming summarize_phase(std::string name, std::vector<double> samples) {
  PhaseTiming t;
  t.name = std::move(name);
  t.samples_ms = samples;
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  t.median_ms = n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
  t.min_ms = samples.front();
  t.max_ms = samples.back();
  return t;
}

}  // namespace

BenchReport run_bench(const MultiLayeredNetwork& net, const BenchOptions& options) {
  if (options.repetitions < 3) throw std::invalid_argument("bench needs at least 3 repetitions");
  if (options.workloads.empty()) throw std::invalid_argument("bench needs at least one workload");
  for (const auto& params : options.workloads) params.validate();

  BenchReport report;
  report.nodes = net.node_count();
  report.edges = net.edge_count();
  report.workloads = options.workloads;
  report.repetitions = options.repetitions;
  report.sources = options.sources;
  if (report.sources.empty()) {
    const std::size_t k = std::min(options.default_sources, net.node_count());
    for (std::size_t i = 0; i < k; ++i) {
      report.sources.push_back(net.id_of(static_cast<NodeIndex>(i * net.node_count() / k)));
    }
  }
  std::vector<NodeIndex> sources;
  for (NodeId s : report.sources) sources.push_back(net.index_of(s));

  std::vector<double> aggregate_ms, search_ms, dap_ms, mda_ms;
  for (int rep = 0; rep < options.repetitions; ++rep) {
    double aggregate = 0.0, search = 0.0, mda = 0.0;
    std::vector<std::vector<double>> dap_lengths;
    for (const auto& params : options.workloads) {
      const auto t0 = Clock::now();
      const AggregatedGraph graph = aggregate_graph(net, params);
      const auto t1 = Clock::now();
      for (NodeIndex s : sources) dap_lengths.push_back(dijkstra(graph, s).lengths);
      const auto t2 = Clock::now();
      aggregate += elapsed_ms(t0, t1);
      search += elapsed_ms(t1, t2);
    }
    std::size_t run = 0;
    for (const auto& params : options.workloads) {
      for (NodeIndex s : sources) {
        const auto t0 = Clock::now();
        const ShortestPathResult result = mda_sssp(net, net.id_of(s), params);
        mda += elapsed_ms(t0, Clock::now());
        if (result.lengths != dap_lengths[run++]) report.results_agree = false;
      }
    }
    aggregate_ms.push_back(aggregate);
    search_ms.push_back(search);
    dap_ms.push_back(aggregate + search);
    mda_ms.push_back(mda);
  }
  report.dap_aggregate = summarize_phase("dap.aggregate", aggregate_ms);
  report.dap_search = summarize_phase("dap.search", search_ms);
  report.dap_total = summarize_phase("dap.total", dap_ms);
  report.mda_total = summarize_phase("mda.total", mda_ms);
  if (report.dap_total.median_ms > 0.0) {
    report.mda_overhead_pct =
        100.0 * (report.mda_total.median_ms - report.dap_total.median_ms) / report.dap_total.median_ms;
  }
  return report;
}

}  // namespace mlsp
