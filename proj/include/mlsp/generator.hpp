#pragma once

#include <cstdint>
#include <vector>

#include "mlsp/network.hpp"

namespace mlsp {

/// Random multi-layered network: every layer is an independent directed
/// G(n, p) over nodes 0..nodes-1 with weights drawn uniformly from [0, 1] and
/// rounded to `weight_decimals` places (so they survive a CSV round trip).
struct GeneratorParams {
  std::size_t nodes = 100;
  std::size_t layers = 3;
  double density = 0.05;  // per-layer probability of each ordered pair
  std::uint64_t seed = 1;
  int weight_decimals = 6;
};

/// Edges in generation order (layer, then pair index). Throws
/// std::invalid_argument for nodes == 0, layers outside [1, 64], or density
/// outside [0, 1].
std::vector<LayeredEdge> generate_edges(const GeneratorParams& params);

/// Sealed network holding every node 0..nodes-1, including isolated ones.
MultiLayeredNetwork generate_network(const GeneratorParams& params,
                                     Polarity polarity = Polarity::kPositive);

/// Builds a sealed network from explicit nodes and edges over `layers` layers.
MultiLayeredNetwork build_network(std::size_t nodes, std::size_t layers,
                                  const std::vector<LayeredEdge>& edges,
                                  Polarity polarity = Polarity::kPositive);

}  // namespace mlsp
