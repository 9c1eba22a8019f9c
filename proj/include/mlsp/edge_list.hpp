#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlsp/network.hpp"

namespace mlsp {

/// CSV edge lists.
///
///   src,dst,layer,weight
///   ,,work,          declares layer "work" (fixes its index)
///   7,,,             registers node 7, possibly isolated
///   1,2,work,0.5     layered edge
///
/// Layers are indexed in order of first appearance. Weights are plain
/// decimals in [0, 1] with at most 15 significant digits.
inline constexpr const char* kEdgeListHeader = "src,dst,layer,weight";
inline constexpr int kMaxWeightDigits = 15;

struct LoadOptions {
  Polarity polarity = Polarity::kPositive;
  DuplicatePolicy on_duplicate = DuplicatePolicy::kError;
};

/// Throws Error with kParseError, kLoopEdge, kDuplicateEdge,
/// kWeightOutOfRange, or kEmptyFile; messages carry the 1-based line number.
MultiLayeredNetwork read_edge_list(std::istream& in, const LoadOptions& options = {});
/// As above; kIo when the file cannot be opened.
MultiLayeredNetwork load_edge_list(const std::filesystem::path& path,
                                   const LoadOptions& options = {});

/// Writes layer declarations, isolated nodes, then edges in (src, dst, layer)
/// order with shortest round-trip weights. Throws kInconsistentInput for a
/// weight that needs more than 15 significant digits.
void write_edge_list(const MultiLayeredNetwork& net, std::ostream& out);
void save_edge_list(const MultiLayeredNetwork& net, const std::filesystem::path& path);

/// Shortest plain decimal (no exponent) that parses back to `value` exactly.
std::string format_weight(double value);

struct NetworkSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t pairs = 0;
  std::vector<std::string> layer_labels;
  std::vector<std::size_t> layer_edges;
};

NetworkSummary summarize(const MultiLayeredNetwork& net);

}  // namespace mlsp
