#pragma once

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "mlsp/aggregate.hpp"
#include "mlsp/network.hpp"

namespace mlsp {

/// Marker for "no path". Infinity absorbs additions, so a path sum can never
/// wrap into a finite value.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

inline bool is_reachable(double length) noexcept { return length != kUnreachable; }

/// Predecessor of nodes that were never reached.
inline constexpr NodeIndex kNoPredecessor = std::numeric_limits<NodeIndex>::max();
/// Predecessor recorded for the source itself.
inline constexpr NodeIndex kRootPredecessor = std::numeric_limits<NodeIndex>::max() - 1;

/// Single-source shortest multi-layered paths, indexed by NodeIndex.
struct ShortestPathResult {
  NodeId source;
  NodeIndex source_index = 0;
  AggregationParams params;
  std::shared_ptr<const std::vector<NodeId>> nodes;
  std::vector<double> lengths;
  std::vector<NodeIndex> predecessors;

  std::size_t node_count() const noexcept { return lengths.size(); }
  /// Throws kUnknownNode.
  NodeIndex index_of(NodeId id) const;
  double length_to(NodeId target) const { return lengths[index_of(target)]; }
};

/// All-pairs shortest lengths, row-major over the network's node order.
struct DistanceMatrix {
  std::shared_ptr<const std::vector<NodeId>> nodes;
  std::size_t size = 0;
  std::vector<double> values;

  double at(NodeIndex from, NodeIndex to) const noexcept { return values[from * size + to]; }
  std::span<const double> row(NodeIndex from) const noexcept {
    return {values.data() + from * size, size};
  }
};

/// Plain Dijkstra over an already aggregated graph. Among frontier nodes with
/// equal tentative length the lowest index is settled first.
ShortestPathResult dijkstra(const AggregatedGraph& graph, NodeIndex source);

/// Aggregate first, then search. Throws kUnknownNode and parameter errors.
ShortestPathResult dap_sssp(const MultiLayeredNetwork& net, NodeId source,
                            const AggregationParams& params);

/// Search the layered network directly: neighbours come from the
/// multi-layered out-neighbourhood at alpha, and each candidate edge's
/// distance is computed when it is first touched and checked against beta.
ShortestPathResult mda_sssp(const MultiLayeredNetwork& net, NodeId source,
                            const AggregationParams& params);

struct ApspOptions {
  std::size_t max_nodes = 2000;
  unsigned jobs = 1;
};

/// Floyd–Warshall over the aggregated graph. Throws kSizeGuardExceeded when
/// the network has more than options.max_nodes nodes.
DistanceMatrix ml_floyd_warshall(const MultiLayeredNetwork& net, const AggregationParams& params,
                                 const ApspOptions& options = {});

/// One Dijkstra run per source over a single aggregation.
DistanceMatrix repeated_dijkstra_apsp(const MultiLayeredNetwork& net,
                                      const AggregationParams& params,
                                      const ApspOptions& options = {});

/// Exhaustive enumeration of simple paths in the aggregated graph. Test
/// oracle; throws kSizeGuardExceeded above max_nodes.
ShortestPathResult brute_force_sp(const MultiLayeredNetwork& net, NodeId source,
                                  const AggregationParams& params, std::size_t max_nodes = 10);

/// Nodes from the source to `target` following predecessors; empty when the
/// target is unreachable. Throws kUnknownNode.
std::vector<NodeId> reconstruct_path(const ShortestPathResult& result, NodeId target);

/// Number of edges on the predecessor path to every node (0 for the source,
/// -1 when unreachable).
std::vector<int> hop_counts(const ShortestPathResult& result);

}  // namespace mlsp
