#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mlsp/error.hpp"

namespace mlsp {

/// External node identifier, as it appears in edge lists.
struct NodeId {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// Dense position of a node inside a sealed network. Indices follow ascending
/// NodeId order, so comparing indices is the same as comparing ids.
using NodeIndex = std::uint32_t;

struct LayerId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(LayerId, LayerId) = default;
};

struct LayeredEdge {
  NodeId src;
  NodeId dst;
  LayerId layer;
  double weight = 0.0;
};

/// Positive weights encode closeness and are turned into distances by 1 - w.
/// Negative weights already behave like distances.
enum class Polarity { kPositive, kNegative };

enum class DuplicatePolicy { kError, kKeepMax };

/// Layer membership of one ordered pair is a bitmask, which caps |L|.
inline constexpr std::size_t kMaxLayers = 64;

class MultiLayeredNetwork;

/// Single-writer construction phase. Nodes are registered on first use in an
/// edge or explicitly through add_node(). seal() produces the immutable
/// network that every algorithm works on.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(Polarity polarity = Polarity::kPositive);
  NetworkBuilder(std::size_t layer_count, Polarity polarity = Polarity::kPositive);

  LayerId add_layer(std::string label);
  /// Returns the layer with this label, creating it on first sight.
  LayerId layer_for_label(const std::string& label);
  std::size_t layer_count() const noexcept { return layer_labels_.size(); }

  void add_node(NodeId id);

  /// Throws kLoopEdge, kWeightOutOfRange, kUnknownLayer, or kDuplicateEdge
  /// (the last only under DuplicatePolicy::kError; kKeepMax keeps the larger
  /// weight).
  void add_edge(const LayeredEdge& edge, DuplicatePolicy policy = DuplicatePolicy::kError);

  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Throws kInconsistentInput when the network has no node or no layer.
  MultiLayeredNetwork seal() &&;

 private:
  struct PairKeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  struct PairSlot {
    NodeId src;
    NodeId dst;
    std::uint64_t mask = 0;
    std::vector<double> weights;  // by layer; 0 where absent
  };

  Polarity polarity_;
  std::vector<std::string> layer_labels_;
  std::unordered_map<std::string, std::uint32_t> label_index_;
  std::unordered_set<std::uint64_t> nodes_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, PairKeyHash> pair_index_;
  std::vector<PairSlot> pairs_;
  std::size_t edge_count_ = 0;
};

/// Sealed multi-layered network <V, E, L> with per-pair weights.
///
/// Storage is compressed by source: every ordered pair (x, y) with at least
/// one layered edge is a "pair slot" holding its layer bitmask and one weight
/// per layer. Weights live in layer-major order (weights[l * pairs + p]) so
/// that distance kernels can stream across pairs.
class MultiLayeredNetwork {
 public:
  using PairIndex = std::size_t;

  Polarity polarity() const noexcept { return polarity_; }
  std::size_t node_count() const noexcept { return node_ids_->size(); }
  std::size_t layer_count() const noexcept { return layer_labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t pair_count() const noexcept { return pair_dst_.size(); }

  std::span<const NodeId> node_ids() const noexcept { return *node_ids_; }
  /// Shared handle on the index -> id table; results keep it alive.
  const std::shared_ptr<const std::vector<NodeId>>& node_table() const noexcept {
    return node_ids_;
  }
  NodeId id_of(NodeIndex index) const { return (*node_ids_)[index]; }
  /// Throws kUnknownNode.
  NodeIndex index_of(NodeId id) const;
  std::optional<NodeIndex> find_index(NodeId id) const noexcept;

  const std::string& layer_label(LayerId layer) const;
  /// Throws kUnknownLayer.
  void check_layer(LayerId layer) const;
  std::span<const std::size_t> layer_edge_counts() const noexcept { return layer_edge_counts_; }

  // Pair slots of one source occupy [pair_begin(x), pair_end(x)) sorted by dst.
  PairIndex pair_begin(NodeIndex src) const noexcept { return pair_offsets_[src]; }
  PairIndex pair_end(NodeIndex src) const noexcept { return pair_offsets_[src + 1]; }
  NodeIndex pair_src(PairIndex p) const noexcept { return pair_src_[p]; }
  NodeIndex pair_dst(PairIndex p) const noexcept { return pair_dst_[p]; }
  std::uint64_t pair_mask(PairIndex p) const noexcept { return pair_mask_[p]; }
  /// card({l : <x, y, l> in E}) for the pair.
  std::int32_t pair_layer_count(PairIndex p) const noexcept { return pair_layer_count_[p]; }
  double weight(PairIndex p, std::size_t layer) const noexcept {
    return weights_[layer * pair_count() + p];
  }
  std::optional<PairIndex> find_pair(NodeIndex src, NodeIndex dst) const noexcept;

  std::span<const double> layer_major_weights() const noexcept { return weights_; }
  std::span<const std::int32_t> pair_layer_counts() const noexcept { return pair_layer_count_; }

  /// {y : <x, y, l> in E}, ascending.
  std::vector<NodeId> out_neighbors(NodeId x, LayerId layer) const;
  /// {y : card({l : <x, y, l> in E}) >= alpha}, ascending. Throws kInvalidAlpha
  /// for alpha < 1.
  std::vector<NodeId> multi_neighborhood_out(NodeId x, int alpha) const;

  /// All layered edges ordered by (src, dst, layer).
  std::vector<LayeredEdge> edges() const;

 private:
  friend class NetworkBuilder;
  MultiLayeredNetwork() = default;

  Polarity polarity_ = Polarity::kPositive;
  std::shared_ptr<const std::vector<NodeId>> node_ids_;
  std::vector<std::string> layer_labels_;
  std::vector<std::size_t> layer_edge_counts_;
  std::size_t edge_count_ = 0;

  std::vector<PairIndex> pair_offsets_;
  std::vector<NodeIndex> pair_src_;
  std::vector<NodeIndex> pair_dst_;
  std::vector<std::uint64_t> pair_mask_;
  std::vector<std::int32_t> pair_layer_count_;
  std::vector<double> weights_;
};

}  // namespace mlsp
