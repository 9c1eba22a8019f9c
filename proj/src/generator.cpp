#include "mlsp/generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mlsp {

std::vector<LayeredEdge> generate_edges(const GeneratorParams& params) {
  if (params.nodes == 0) throw std::invalid_argument("generator needs at least one node");
  if (params.layers == 0 || params.layers > kMaxLayers) {
    throw std::invalid_argument("generator layer count must lie in [1, 64]");
  }
  if (!(params.density >= 0.0 && params.density <= 1.0)) {
    throw std::invalid_argument("generator density must lie in [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double scale = std::pow(10.0, params.weight_decimals);
  auto draw_weight = [&] { return std::round(uniform(rng) * scale) / scale; };

  const std::uint64_t n = params.nodes;
  const std::uint64_t slots = n * (n - 1);  // ordered pairs without loops
  std::vector<LayeredEdge> edges;
  if (slots == 0 || params.density == 0.0) return edges;
  edges.reserve(static_cast<std::size_t>(static_cast<double>(slots) * params.density *
                                         static_cast<double>(params.layers) * 1.1) + 16);

  for (std::uint32_t l = 0; l < params.layers; ++l) {
    auto emit = [&](std::uint64_t slot) {
      const std::uint64_t src = slot / (n - 1);
      const std::uint64_t r = slot % (n - 1);
      const std::uint64_t dst = r < src ? r : r + 1;
      edges.push_back(LayeredEdge{NodeId{src}, NodeId{dst}, LayerId{l}, draw_weight()});
    };
    if (params.density >= 1.0) {
      for (std::uint64_t slot = 0; slot < slots; ++slot) emit(slot);
      continue;
    }
    // Skip ahead by geometric gaps instead of testing every pair.
    std::geometric_distribution<std::uint64_t> gap(params.density);
    for (std::uint64_t slot = gap(rng); slot < slots; slot += 1 + gap(rng)) emit(slot);
  }
  return edges;
}

MultiLayeredNetwork build_network(std::size_t nodes, std::size_t layers,
                                  const std::vector<LayeredEdge>& edges, Polarity polarity) {
  NetworkBuilder builder(layers, polarity);
  for (std::uint64_t v = 0; v < nodes; ++v) builder.add_node(NodeId{v});
  for (const auto& e : edges) builder.add_edge(e);
  return std::move(builder).seal();
}

MultiLayeredNetwork generate_network(const GeneratorParams& params, Polarity polarity) {
  return build_network(params.nodes, params.layers, generate_edges(params), polarity);
}

}  // namespace mlsp
