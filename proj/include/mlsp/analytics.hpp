#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mlsp/aggregate.hpp"
#include "mlsp/network.hpp"
#include "mlsp/shortest_path.hpp"

namespace mlsp {

/// Path statistics for one (source, alpha, beta) run.
struct PathStats {
  NodeId source;
  int alpha = 1;
  double beta = 1.0;
  std::size_t num_routes = 0;     // reachable targets other than the source
  double avg_len = 0.0;
  double min_len = 0.0;
  double max_len = 0.0;
  double avg_handshakes = 0.0;    // mean hop count over reachable targets
  std::size_t num_neighbors = 0;  // aggregated out-degree of the source
  double pct_connected = 0.0;     // num_routes / (|V| - 1), in [0, 1]
};

/// Throws kInconsistentInput when `result` was not computed on `net` with
/// `params`.
PathStats path_stats(const ShortestPathResult& result, const MultiLayeredNetwork& net,
                     const AggregationParams& params);

/// Aggregated out-degree of `source` under `params`.
std::size_t aggregated_out_degree(const MultiLayeredNetwork& net, NodeIndex source,
                                  const AggregationParams& params);

struct SweepCell {
  int alpha = 1;
  double beta = 1.0;
  std::size_t edge_count = 0;
  std::vector<PathStats> stats;  // one per requested source, possibly empty
};

struct SweepReport {
  AggregationMode mode = AggregationMode::kCombined;
  std::vector<int> alphas;
  std::vector<double> betas;
  std::vector<SweepCell> cells;  // alpha-major: cells[a * betas.size() + b]

  const SweepCell& cell(std::size_t alpha_pos, std::size_t beta_pos) const {
    return cells[alpha_pos * betas.size() + beta_pos];
  }
};

struct SweepOptions {
  AggregationMode mode = AggregationMode::kCombined;
  std::vector<NodeId> sources;  // per-cell statistics when non-empty
  unsigned jobs = 1;
};

/// Aggregated edge counts over the alpha x beta grid. Pair distances are
/// computed once and re-thresholded per cell. Throws kInconsistentInput for an
/// empty grid and parameter errors for invalid grid values.
SweepReport edge_count_sweep(const MultiLayeredNetwork& net, std::span<const int> alphas,
                             std::span<const double> betas, const SweepOptions& options = {});

}  // namespace mlsp
