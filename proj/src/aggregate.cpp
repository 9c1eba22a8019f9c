#include "mlsp/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mlsp/simd/kernels.hpp"

namespace mlsp {

std::string_view to_string(AggregationMode mode) noexcept {
  switch (mode) {
    case AggregationMode::kLayersOnly: return "layers";
    case AggregationMode::kDistanceOnly: return "distance";
    case AggregationMode::kCombined: return "combined";
  }
  return "combined";
}

AggregationMode parse_aggregation_mode(std::string_view text) {
  if (text == "layers") return AggregationMode::kLayersOnly;
  if (text == "distance") return AggregationMode::kDistanceOnly;
  if (text == "combined") return AggregationMode::kCombined;
  throw std::invalid_argument("unknown aggregation mode '" + std::string(text) + "'");
}

void validate_alpha(int alpha) {
  if (alpha < 1) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be >= 1, got " + std::to_string(alpha));
  }
}

void validate_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kInvalidBeta, "beta must lie in [0, 1], got " + std::to_string(beta));
  }
}

void AggregationParams::validate() const {
  validate_alpha(alpha);
  validate_beta(beta);
}

double pair_distance(const MultiLayeredNetwork& net, MultiLayeredNetwork::PairIndex pair) noexcept {
  double sum = 0.0;
  for (std::size_t l = 0; l < net.layer_count(); ++l) sum += net.weight(pair, l);
  return simd::distance_from_sum(sum, net.layer_count(), net.polarity());
}

double distance(const MultiLayeredNetwork& net, NodeId x, NodeId y) {
  const NodeIndex src = net.index_of(x);
  const NodeIndex dst = net.index_of(y);
  if (src == dst) throw Error(ErrorCode::kSameNode, "distance needs two distinct nodes");
  if (auto pair = net.find_pair(src, dst)) return pair_distance(net, *pair);
  return simd::distance_from_sum(0.0, net.layer_count(), net.polarity());
}

namespace {

std::optional<AggregatedEdge> me_with(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                      const AggregationParams& params) {
  const NodeIndex src = net.index_of(x);
  const NodeIndex dst = net.index_of(y);
  if (src == dst) throw Error(ErrorCode::kSameNode, "multi-layered edge needs two distinct nodes");
  const auto pair = net.find_pair(src, dst);
  if (!pair) return std::nullopt;
  const double d = pair_distance(net, *pair);
  const std::int32_t count = net.pair_layer_count(*pair);
  if (!params.admits(count, d)) return std::nullopt;
  return AggregatedEdge{x, y, d, count};
}

}  // namespace

std::optional<AggregatedEdge> me_layers(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                        int alpha) {
  validate_alpha(alpha);
  return me_with(net, x, y, {alpha, 1.0, AggregationMode::kLayersOnly});
}

std::optional<AggregatedEdge> me_distance(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                          double beta) {
  validate_beta(beta);
  return me_with(net, x, y, {1, beta, AggregationMode::kDistanceOnly});
}

std::optional<AggregatedEdge> me_combined(const MultiLayeredNetwork& net, NodeId x, NodeId y,
                                          int alpha, double beta) {
  const AggregationParams params{alpha, beta, AggregationMode::kCombined};
  params.validate();
  return me_with(net, x, y, params);
}

std::optional<AggregatedGraph::EdgeIndex> AggregatedGraph::find(NodeIndex src,
                                                                NodeIndex dst) const noexcept {
  const auto first = dst_.begin() + static_cast<std::ptrdiff_t>(edge_begin(src));
  const auto last = dst_.begin() + static_cast<std::ptrdiff_t>(edge_end(src));
  auto it = std::lower_bound(first, last, dst);
  if (it == last || *it != dst) return std::nullopt;
  return static_cast<EdgeIndex>(it - dst_.begin());
}

std::vector<double> all_pair_distances(const MultiLayeredNetwork& net) {
  std::vector<double> out(net.pair_count());
  simd::pair_distances(net.layer_major_weights(), net.layer_count(), net.polarity(), out);
  return out;
}

std::size_t count_aggregated_edges(const MultiLayeredNetwork& net, std::span<const double> distances,
                                   const AggregationParams& params) {
  params.validate();
  if (distances.size() != net.pair_count()) {
    throw Error(ErrorCode::kInconsistentInput, "distance buffer does not match the network");
  }
  return simd::admit_pairs(distances, net.pair_layer_counts(), params.effective_alpha(),
                           params.effective_beta(), {});
}

AggregatedGraph aggregate_graph(const MultiLayeredNetwork& net, const AggregationParams& params) {
  params.validate();
  const std::vector<double> distances = all_pair_distances(net);
  std::vector<std::uint8_t> admitted(net.pair_count());
  const std::size_t total = simd::admit_pairs(distances, net.pair_layer_counts(),
                                              params.effective_alpha(), params.effective_beta(),
                                              admitted);

  AggregatedGraph graph;
  graph.params_ = params;
  graph.node_ids_ = net.node_table();
  graph.offsets_.assign(net.node_count() + 1, 0);
  graph.dst_.reserve(total);
  graph.distance_.reserve(total);
  graph.layer_count_.reserve(total);
  for (NodeIndex x = 0; x < net.node_count(); ++x) {
    for (auto p = net.pair_begin(x); p < net.pair_end(x); ++p) {
      if (!admitted[p]) continue;
      graph.dst_.push_back(net.pair_dst(p));
      graph.distance_.push_back(distances[p]);
      graph.layer_count_.push_back(net.pair_layer_count(p));
    }
    graph.offsets_[x + 1] = graph.dst_.size();
  }
  return graph;
}

}  // namespace mlsp
