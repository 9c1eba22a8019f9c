#include "mlsp/shortest_path.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "mlsp/parallel.hpp"
#include "mlsp/simd/kernels.hpp"

namespace mlsp {

NodeIndex ShortestPathResult::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes->begin(), nodes->end(), id);
  if (it == nodes->end() || *it != id) {
    throw Error(ErrorCode::kUnknownNode, "unknown node " + std::to_string(id.value));
  }
  return static_cast<NodeIndex>(it - nodes->begin());
}

namespace {

ShortestPathResult make_result(const std::shared_ptr<const std::vector<NodeId>>& nodes,
                               NodeIndex source, const AggregationParams& params) {
  ShortestPathResult result;
  result.source = (*nodes)[source];
  result.source_index = source;
  result.params = params;
  result.nodes = nodes;
  result.lengths.assign(nodes->size(), kUnreachable);
  result.predecessors.assign(nodes->size(), kNoPredecessor);
  result.lengths[source] = 0.0;
  result.predecessors[source] = kRootPredecessor;
  return result;
}

// Shared Dijkstra loop. `expand(v, relax)` calls relax(w, d) for every
// admissible edge v -> w of distance d.
template <class Expand>
void run_dijkstra(ShortestPathResult& result, Expand&& expand) {
  using Entry = std::pair<double, NodeIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::vector<char> settled(result.node_count(), 0);
  auto& lengths = result.lengths;
  auto& preds = result.predecessors;
  frontier.emplace(0.0, result.source_index);
  while (!frontier.empty()) {
    const auto [length, v] = frontier.top();
    frontier.pop();
    if (settled[v] || length > lengths[v]) continue;
    settled[v] = 1;
    expand(v, [&](NodeIndex w, double d) {
      const double candidate = length + d;
      if (lengths[w] > candidate) {
        lengths[w] = candidate;
        preds[w] = v;
        frontier.emplace(candidate, w);
      }
    });
  }
}

}  // namespace

ShortestPathResult dijkstra(const AggregatedGraph& graph, NodeIndex source) {
  if (source >= graph.node_count()) {
    throw Error(ErrorCode::kUnknownNode, "source index out of range");
  }
  ShortestPathResult result = make_result(graph.node_table(), source, graph.params());
  run_dijkstra(result, [&graph](NodeIndex v, auto&& relax) {
    for (auto e = graph.edge_begin(v); e < graph.edge_end(v); ++e) {
      relax(graph.target(e), graph.distance(e));
    }
  });
  return result;
}

ShortestPathResult dap_sssp(const MultiLayeredNetwork& net, NodeId source,
                            const AggregationParams& params) {
  const NodeIndex s = net.index_of(source);
  return dijkstra(aggregate_graph(net, params), s);
}

ShortestPathResult mda_sssp(const MultiLayeredNetwork& net, NodeId source,
                            const AggregationParams& params) {
  params.validate();
  const NodeIndex s = net.index_of(source);
  const std::int32_t alpha = params.effective_alpha();
  const double beta = params.effective_beta();
  ShortestPathResult result = make_result(net.node_table(), s, params);
  run_dijkstra(result, [&](NodeIndex v, auto&& relax) {
    for (auto p = net.pair_begin(v); p < net.pair_end(v); ++p) {
      if (net.pair_layer_count(p) < alpha) continue;
      const double d = pair_distance(net, p);
      if (d <= beta) relax(net.pair_dst(p), d);
    }
  });
  return result;
}

namespace {

void check_guard(const MultiLayeredNetwork& net, std::size_t max_nodes, const char* what) {
  if (net.node_count() > max_nodes) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                std::string(what) + " refused: " + std::to_string(net.node_count()) +
                    " nodes exceed the limit of " + std::to_string(max_nodes) +
                    " (raise it with --max-nodes)");
  }
}

}  // namespace

DistanceMatrix ml_floyd_warshall(const MultiLayeredNetwork& net, const AggregationParams& params,
                                 const ApspOptions& options) {
  check_guard(net, options.max_nodes, "all-pairs computation");
  const AggregatedGraph graph = aggregate_graph(net, params);
  const std::size_t n = graph.node_count();
  DistanceMatrix matrix{net.node_table(), n, std::vector<double>(n * n, kUnreachable)};
  double* values = matrix.values.data();
  for (NodeIndex i = 0; i < n; ++i) {
    values[i * n + i] = 0.0;
    for (auto e = graph.edge_begin(i); e < graph.edge_end(i); ++e) {
      double& cell = values[i * n + graph.target(e)];
      cell = std::min(cell, graph.distance(e));
    }
  }
  const auto& kernels = simd::active_kernels();
  for (std::size_t k = 0; k < n; ++k) {
    const double* via_row = values + k * n;
    // Row k cannot improve through itself, so it is read-only in this pass.
    parallel_for(n, options.jobs, [&](std::size_t i) {
      const double via = values[i * n + k];
      if (i == k || !is_reachable(via)) return;
      kernels.min_plus_row(values + i * n, via_row, via, n);
    });
  }
  return matrix;
}

DistanceMatrix repeated_dijkstra_apsp(const MultiLayeredNetwork& net,
                                      const AggregationParams& params,
                                      const ApspOptions& options) {
  check_guard(net, options.max_nodes, "all-pairs computation");
  const AggregatedGraph graph = aggregate_graph(net, params);
  const std::size_t n = graph.node_count();
  DistanceMatrix matrix{net.node_table(), n, std::vector<double>(n * n, kUnreachable)};
  parallel_for(n, options.jobs, [&](std::size_t i) {
    const ShortestPathResult result = dijkstra(graph, static_cast<NodeIndex>(i));
    std::copy(result.lengths.begin(), result.lengths.end(), matrix.values.begin() + i * n);
  });
  return matrix;
}

ShortestPathResult brute_force_sp(const MultiLayeredNetwork& net, NodeId source,
                                  const AggregationParams& params, std::size_t max_nodes) {
  check_guard(net, max_nodes, "brute-force enumeration");
  const NodeIndex s = net.index_of(source);
  const AggregatedGraph graph = aggregate_graph(net, params);
  ShortestPathResult result = make_result(net.node_table(), s, params);

  std::vector<char> on_path(graph.node_count(), 0);
  on_path[s] = 1;
  // Depth-first over every simple path; each prefix is a candidate.
  std::function<void(NodeIndex, double)> walk = [&](NodeIndex v, double length) {
    for (auto e = graph.edge_begin(v); e < graph.edge_end(v); ++e) {
      const NodeIndex w = graph.target(e);
      if (on_path[w]) continue;
      const double total = length + graph.distance(e);
      if (total < result.lengths[w]) {
        result.lengths[w] = total;
        result.predecessors[w] = v;
      }
      on_path[w] = 1;
      walk(w, total);
      on_path[w] = 0;
    }
  };
  walk(s, 0.0);
  return result;
}

std::vector<NodeId> reconstruct_path(const ShortestPathResult& result, NodeId target) {
  NodeIndex v = result.index_of(target);
  if (!is_reachable(result.lengths[v])) return {};
  std::vector<NodeId> path;
  while (true) {
    path.push_back((*result.nodes)[v]);
    if (v == result.source_index) break;
    v = result.predecessors[v];
    if (v == kNoPredecessor || v == kRootPredecessor || path.size() > result.node_count()) {
      throw Error(ErrorCode::kInconsistentInput, "predecessor chain does not reach the source");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> hop_counts(const ShortestPathResult& result) {
  const std::size_t n = result.node_count();
  std::vector<int> hops(n, -1);
  hops[result.source_index] = 0;
  std::vector<NodeIndex> chain;
  for (NodeIndex v = 0; v < n; ++v) {
    if (hops[v] >= 0 || !is_reachable(result.lengths[v])) continue;
    NodeIndex u = v;
    while (hops[u] < 0) {
      chain.push_back(u);
      u = result.predecessors[u];
      if (u >= n || chain.size() > n) {
        throw Error(ErrorCode::kInconsistentInput, "predecessor chain does not reach the source");
      }
    }
    for (int base = hops[u]; !chain.empty(); chain.pop_back()) hops[chain.back()] = ++base;
  }
  return hops;
}

}  // namespace mlsp
