#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsp/aggregate.hpp"
#include "mlsp/analytics.hpp"
#include "mlsp/bench.hpp"
#include "mlsp/edge_list.hpp"
#include "mlsp/shortest_path.hpp"

namespace mlsp {

enum class OutputFormat { kCsv, kJson };

/// Column order of path-statistics rows.
inline constexpr const char* kStatsHeader =
    "source,alpha,beta,num_routes,avg_len,min_len,max_len,avg_handshakes,num_neighbors,"
    "pct_connected";
inline constexpr const char* kPathsHeader = "source,alpha,beta,target,length,hops,path";
inline constexpr const char* kSweepHeader = "alpha,beta,edge_count";
inline constexpr const char* kAggregatedHeader = "src,dst,distance,layer_count";
inline constexpr const char* kBenchHeader = "phase,median_ms,min_ms,max_ms";

/// Shortest round-trip text for finite values, "inf" for unreachable.
std::string format_number(double value);

void emit_summary(const NetworkSummary& summary, OutputFormat format, std::ostream& out);
/// One line for logs: counts plus per-layer edges.
std::string summary_line(const NetworkSummary& summary);


void emit_stats(std::span<const PathStats> rows, std::span<const ShortestPathResult> paths,
                OutputFormat format, std::ostream& out);
void emit_matrix(const DistanceMatrix& matrix, OutputFormat format, std::ostream& out);
void emit_sweep(const SweepReport& report, OutputFormat format, std::ostream& out);
void emit_aggregated(const AggregatedGraph& graph, OutputFormat format, std::ostream& out);
void emit_bench(const BenchReport& report, OutputFormat format, std::ostream& out);

}  // namespace mlsp
