#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mlsp/network.hpp"

namespace mlsp {

/// Which thresholds a multi-layered edge has to pass.
enum class AggregationMode {
  kLayersOnly,    // layer count >= alpha
  kDistanceOnly,  // distance <= beta
  kCombined,      // both
};

std::string_view to_string(AggregationMode mode) noexcept;
/// Accepts "layers", "distance", "combined". Throws std::invalid_argument.
AggregationMode parse_aggregation_mode(std::string_view text);

struct AggregationParams {
  int alpha = 1;
  double beta = 1.0;
  AggregationMode mode = AggregationMode::kCombined;

  /// Throws kInvalidAlpha / kInvalidBeta.
  void validate() const;

  /// Thresholds with the inactive one made vacuous, so every mode reduces to
  /// the combined test `count >= alpha && distance <= beta`.
  std::int32_t effective_alpha() const noexcept {
    return mode == AggregationMode::kDistanceOnly ? 1 : alpha;
  }
  double effective_beta() const noexcept {
    return mode == AggregationMode::kLayersOnly ? std::numeric_limits<double>::infinity() : beta;
  }
  bool admits(std::int32_t layer_count, double distance) const noexcept {
    return layer_count >= effective_alpha() && distance <= effective_beta();
  }

  friend bool operator==(const AggregationParams&, const AggregationParams&) = default;
};

void validate_alpha(int alpha);
void validate_beta(double beta);

struct AggregatedEdge {
  NodeId src;
  NodeId dst;
  double distance = 0.0;
  std::int32_t layer_count = 0;
};

/// Distance of one stored pair, computed on demand with the same rounding as
/// the batched kernels.
double pair_distance(const MultiLayeredNetwork& net, MultiLayeredNetwork::PairIndex pair) noexcept;

/// Layer-averaged distance d(x, y). For a positive network this is
/// 1 - sum(w) / |L| (1 when x and y share no edge); for a negative one it is
/// sum(w) / |L| clamped to [0, 1]. Throws kUnknownNode, kSameNode.
double distance(const MultiLayeredNetwork& net, NodeId x, NodeId y);

/// Multi-layered edge by layer count. Throws kInvalidAlpha.
std::optional<AggregatedEdge> me_layers(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                        int alpha);
/// Multi-layered edge by distance. Pairs without any layered edge never
/// qualify, even at beta = 1. Throws kInvalidBeta.
std::optional<AggregatedEdge> me_distance(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                          double beta);
/// Both thresholds. Throws kInvalidAlpha / kInvalidBeta.
std::optional<AggregatedEdge> me_combined(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                          int alpha, double beta);

/// Simple weighted digraph of the multi-layered edges admitted under fixed
/// parameters, stored compressed by source with targets ascending.
class AggregatedGraph {
 public:
  using EdgeIndex = std::size_t;

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return dst_.size(); }
  const AggregationParams& params() const noexcept { return params_; }
  const std::shared_ptr<const std::vector<NodeId>>& node_table() const noexcept {
    return node_ids_;
  }

  EdgeIndex edge_begin(NodeIndex src) const noexcept { return offsets_[src]; }
  EdgeIndex edge_end(NodeIndex src) const noexcept { return offsets_[src + 1]; }
  NodeIndex target(EdgeIndex e) const noexcept { return dst_[e]; }
  double distance(EdgeIndex e) const noexcept { return distance_[e]; }
  std::int32_t layer_count(EdgeIndex e) const noexcept { return layer_count_[e]; }
  std::size_t out_degree(NodeIndex src) const noexcept { return edge_end(src) - edge_begin(src); }

  std::optional<EdgeIndex> find(NodeIndex src, NodeIndex dst) const noexcept;

 private:
  friend AggregatedGraph aggregate_graph(const MultiLayeredNetwork&, const AggregationParams&);
  AggregatedGraph() = default;

  AggregationParams params_;
  std::shared_ptr<const std::vector<NodeId>> node_ids_;
  std::vector<EdgeIndex> offsets_;
  std::vector<NodeIndex> dst_;
  std::vector<double> distance_;
  std::vector<std::int32_t> layer_count_;
};

/// Collapses parallel layered edges into multi-layered edges. Only pairs with
/// at least one layered edge are considered.
AggregatedGraph aggregate_graph(const MultiLayeredNetwork& net, const AggregationParams& params);

/// Distances of every stored pair, in pair order.
std::vector<double> all_pair_distances(const MultiLayeredNetwork& net);

/// Number of aggregated edges for `params`, given precomputed pair distances.
std::size_t count_aggregated_edges(const MultiLayeredNetwork& net, std::span<const double> distances,
                                   const AggregationParams& params);

}  // namespace mlsp
