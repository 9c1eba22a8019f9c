#include "mlsp/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace mlsp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kUnknownLayer: return "UnknownLayer";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kTooManyLayers: return "TooManyLayers";
    case ErrorCode::kSameNode: return "SameNode";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kInvalidBeta: return "InvalidBeta";
    case ErrorCode::kSizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::kInconsistentInput: return "InconsistentInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string node_text(NodeId id) { return std::to_string(id.value); }

}  // namespace

NetworkBuilder::NetworkBuilder(Polarity polarity) : polarity_(polarity) {}

NetworkBuilder::NetworkBuilder(std::size_t layer_count, Polarity polarity)
    : polarity_(polarity) {
  for (std::size_t l = 0; l < layer_count; ++l) add_layer("l" + std::to_string(l + 1));
}

LayerId NetworkBuilder::add_layer(std::string label) {
  if (layer_labels_.size() >= kMaxLayers) {
    throw Error(ErrorCode::kTooManyLayers,
                "at most " + std::to_string(kMaxLayers) + " layers are supported");
  }
  if (label_index_.contains(label)) {
    throw Error(ErrorCode::kInconsistentInput, "layer label '" + label + "' already registered");
  }
  const auto index = static_cast<std::uint32_t>(layer_labels_.size());
  label_index_.emplace(label, index);
  layer_labels_.push_back(std::move(label));
  for (auto& slot : pairs_) slot.weights.push_back(0.0);
  return LayerId{index};
}

LayerId NetworkBuilder::layer_for_label(const std::string& label) {
  if (auto it = label_index_.find(label); it != label_index_.end()) return LayerId{it->second};
  return add_layer(label);
}

void NetworkBuilder::add_node(NodeId id) { nodes_.insert(id.value); }

void NetworkBuilder::add_edge(const LayeredEdge& edge, DuplicatePolicy policy) {
  if (edge.src == edge.dst) {
    throw Error(ErrorCode::kLoopEdge, "loop edge on node " + node_text(edge.src));
  }
  if (!(edge.weight >= 0.0 && edge.weight <= 1.0)) {
    throw Error(ErrorCode::kWeightOutOfRange,
                "weight " + std::to_string(edge.weight) + " outside [0, 1]");
  }
  if (edge.layer.index >= layer_labels_.size()) {
    throw Error(ErrorCode::kUnknownLayer, "unknown layer " + std::to_string(edge.layer.index));
  }
  const std::uint64_t bit = std::uint64_t{1} << edge.layer.index;
  auto [it, inserted] = pair_index_.try_emplace({edge.src.value, edge.dst.value}, pairs_.size());
  if (inserted) {
    pairs_.push_back(PairSlot{edge.src, edge.dst, 0, std::vector<double>(layer_labels_.size(), 0.0)});
  }
  PairSlot& slot = pairs_[it->second];
  if (slot.mask & bit) {
    if (policy == DuplicatePolicy::kError) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + node_text(edge.src) + " -> " + node_text(edge.dst) +
                      " on layer '" + layer_labels_[edge.layer.index] + "'");
    }
    slot.weights[edge.layer.index] = std::max(slot.weights[edge.layer.index], edge.weight);
    return;
  }
  slot.mask |= bit;
  slot.weights[edge.layer.index] = edge.weight;
  nodes_.insert(edge.src.value);
  nodes_.insert(edge.dst.value);
  ++edge_count_;
}

MultiLayeredNetwork NetworkBuilder::seal() && {
  if (nodes_.empty()) throw Error(ErrorCode::kInconsistentInput, "network has no nodes");
  if (layer_labels_.empty()) throw Error(ErrorCode::kInconsistentInput, "network has no layers");

  MultiLayeredNetwork net;
  net.polarity_ = polarity_;
  net.edge_count_ = edge_count_;
  net.layer_labels_ = std::move(layer_labels_);

  std::vector<NodeId> ids;
  ids.reserve(nodes_.size());
  for (auto v : nodes_) ids.push_back(NodeId{v});
  std::sort(ids.begin(), ids.end());
  if (ids.size() > std::numeric_limits<NodeIndex>::max() - 2) {
    throw Error(ErrorCode::kSizeGuardExceeded, "too many nodes");
  }
  auto index_of = [&ids](NodeId id) {
    return static_cast<NodeIndex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  const std::size_t n = ids.size();
  const std::size_t layers = net.layer_labels_.size();
  const std::size_t pairs = pairs_.size();

  std::vector<std::pair<NodeIndex, NodeIndex>> keys(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    keys[p] = {index_of(pairs_[p].src), index_of(pairs_[p].dst)};
  }
  std::vector<std::size_t> order(pairs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&keys](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  net.pair_offsets_.assign(n + 1, 0);
  net.pair_src_.resize(pairs);
  net.pair_dst_.resize(pairs);
  net.pair_mask_.resize(pairs);
  net.pair_layer_count_.resize(pairs);
  net.weights_.assign(layers * pairs, 0.0);
  net.layer_edge_counts_.assign(layers, 0);
  for (std::size_t q = 0; q < pairs; ++q) {
    const PairSlot& slot = pairs_[order[q]];
    const auto [s, d] = keys[order[q]];
    net.pair_src_[q] = s;
    net.pair_dst_[q] = d;
    net.pair_mask_[q] = slot.mask;
    net.pair_layer_count_[q] = std::popcount(slot.mask);
    ++net.pair_offsets_[s + 1];
    for (std::size_t l = 0; l < layers; ++l) {
      net.weights_[l * pairs + q] = slot.weights[l];
      if (slot.mask >> l & 1U) ++net.layer_edge_counts_[l];
    }
  }
  std::partial_sum(net.pair_offsets_.begin(), net.pair_offsets_.end(), net.pair_offsets_.begin());
  net.node_ids_ = std::make_shared<const std::vector<NodeId>>(std::move(ids));

  pairs_.clear();
  pair_index_.clear();
  nodes_.clear();
  return net;
}

std::optional<NodeIndex> MultiLayeredNetwork::find_index(NodeId id) const noexcept {
  const auto& ids = *node_ids_;
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids.begin());
}

NodeIndex MultiLayeredNetwork::index_of(NodeId id) const {
  if (auto index = find_index(id)) return *index;
  throw Error(ErrorCode::kUnknownNode, "unknown node " + node_text(id));
}

void MultiLayeredNetwork::check_layer(LayerId layer) const {
  if (layer.index >= layer_labels_.size()) {
    throw Error(ErrorCode::kUnknownLayer, "unknown layer " + std::to_string(layer.index));
  }
}

const std::string& MultiLayeredNetwork::layer_label(LayerId layer) const {
  check_layer(layer);
  return layer_labels_[layer.index];
}

std::optional<MultiLayeredNetwork::PairIndex> MultiLayeredNetwork::find_pair(
    NodeIndex src, NodeIndex dst) const noexcept {
  const auto first = pair_dst_.begin() + static_cast<std::ptrdiff_t>(pair_begin(src));
  const auto last = pair_dst_.begin() + static_cast<std::ptrdiff_t>(pair_end(src));
  auto it = std::lower_bound(first, last, dst);
  if (it == last || *it != dst) return std::nullopt;
  return static_cast<PairIndex>(it - pair_dst_.begin());
}

std::vector<NodeId> MultiLayeredNetwork::out_neighbors(NodeId x, LayerId layer) const {
  const NodeIndex src = index_of(x);
  check_layer(layer);
  std::vector<NodeId> out;
  for (PairIndex p = pair_begin(src); p < pair_end(src); ++p) {
    if (pair_mask_[p] >> layer.index & 1U) out.push_back(id_of(pair_dst_[p]));
  }
  return out;
}

std::vector<NodeId> MultiLayeredNetwork::multi_neighborhood_out(NodeId x, int alpha) const {
  const NodeIndex src = index_of(x);
  if (alpha < 1) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must be >= 1, got " + std::to_string(alpha));
  }
  std::vector<NodeId> out;
  for (PairIndex p = pair_begin(src); p < pair_end(src); ++p) {
    if (pair_layer_count_[p] >= alpha) out.push_back(id_of(pair_dst_[p]));
  }
  return out;
}

std::vector<LayeredEdge> MultiLayeredNetwork::edges() const {
  std::vector<LayeredEdge> out;
  out.reserve(edge_count_);
  for (PairIndex p = 0; p < pair_count(); ++p) {
    for (std::size_t l = 0; l < layer_count(); ++l) {
      if (pair_mask_[p] >> l & 1U) {
        out.push_back(LayeredEdge{id_of(pair_src_[p]), id_of(pair_dst_[p]),
                                  LayerId{static_cast<std::uint32_t>(l)}, weight(p, l)});
      }
    }
  }
  return out;
}

}  // namespace mlsp
