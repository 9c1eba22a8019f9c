#include "mlsp/analytics.hpp"

#include <algorithm>

#include "mlsp/parallel.hpp"

namespace mlsp {

std::size_t aggregated_out_degree(const MultiLayeredNetwork& net, NodeIndex source,
                                  const AggregationParams& params) {
  std::size_t degree = 0;
  for (auto p = net.pair_begin(source); p < net.pair_end(source); ++p) {
    if (params.admits(net.pair_layer_count(p), pair_distance(net, p))) ++degree;
  }
  return degree;
}

PathStats path_stats(const ShortestPathResult& result, const MultiLayeredNetwork& net,
                     const AggregationParams& params) {
  params.validate();
  if (result.node_count() != net.node_count() || result.predecessors.size() != net.node_count() ||
      result.nodes != net.node_table() || !(result.params == params) ||
      result.source_index >= net.node_count() || result.lengths[result.source_index] != 0.0) {
    throw Error(ErrorCode::kInconsistentInput,
                "shortest-path result does not belong to this network and parameter set");
  }

  PathStats stats;
  stats.source = result.source;
  stats.alpha = params.alpha;
  stats.beta = params.beta;
  stats.num_neighbors = aggregated_out_degree(net, result.source_index, params);

  const std::vector<int> hops = hop_counts(result);
  double length_sum = 0.0;
  double hop_sum = 0.0;
  for (NodeIndex v = 0; v < result.node_count(); ++v) {
    if (v == result.source_index || !is_reachable(result.lengths[v])) continue;
    const double len = result.lengths[v];
    if (stats.num_routes == 0) {
      stats.min_len = stats.max_len = len;
    } else {
      stats.min_len = std::min(stats.min_len, len);
      stats.max_len = std::max(stats.max_len, len);
    }
    ++stats.num_routes;
    length_sum += len;
    hop_sum += hops[v];
  }
  if (stats.num_routes > 0) {
    const auto routes = static_cast<double>(stats.num_routes);
    // Clamp guards the mean against summation drift outside [min, max].
    stats.avg_len = std::clamp(length_sum / routes, stats.min_len, stats.max_len);
    stats.avg_handshakes = hop_sum / routes;
  }
  if (net.node_count() > 1) {
    stats.pct_connected =
        static_cast<double>(stats.num_routes) / static_cast<double>(net.node_count() - 1);
  }
  return stats;
}

SweepReport edge_count_sweep(const MultiLayeredNetwork& net, std::span<const int> alphas,
                             std::span<const double> betas, const SweepOptions& options) {
  if (alphas.empty() || betas.empty()) {
    throw Error(ErrorCode::kInconsistentInput, "sweep grid must have at least one alpha and one beta");
  }
  for (int a : alphas) validate_alpha(a);
  for (double b : betas) validate_beta(b);
  for (NodeId s : options.sources) net.index_of(s);

  SweepReport report;
  report.mode = options.mode;
  report.alphas.assign(alphas.begin(), alphas.end());
  report.betas.assign(betas.begin(), betas.end());
  report.cells.resize(alphas.size() * betas.size());

  const std::vector<double> distances = all_pair_distances(net);
  parallel_for(report.cells.size(), options.jobs, [&](std::size_t c) {
    SweepCell& cell = report.cells[c];
    const AggregationParams params{alphas[c / betas.size()], betas[c % betas.size()], options.mode};
    cell.alpha = params.alpha;
    cell.beta = params.beta;
    cell.edge_count = count_aggregated_edges(net, distances, params);
    if (options.sources.empty()) return;
    const AggregatedGraph graph = aggregate_graph(net, params);
    for (NodeId s : options.sources) {
      cell.stats.push_back(path_stats(dijkstra(graph, net.index_of(s)), net, params));
    }
  });
  return report;
}

}  // namespace mlsp
