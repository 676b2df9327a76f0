#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msn/centrality.hpp"
#include "msn/network.hpp"

namespace msn {

struct LayerStatsRow {
  std::string layer;
  std::size_t edges = 0;
  /// Nodes with at least one incident edge on this layer.
  std::size_t active_nodes = 0;
};

struct LayerStatsTable {
  std::vector<LayerStatsRow> rows;
  std::size_t nodes = 0;
  std::size_t total_edges = 0;
  /// Sum of the per-layer active-node column (a node active on two layers
  /// counts twice).
  std::size_t total_layer_active = 0;
  /// Nodes active on any layer.
  std::size_t distinct_active = 0;
};

LayerStatsTable layer_stats(const MultiLayerNetwork& net);

struct RankEntry {
  NodeId node;
  double value = 0.0;
};

/// Positive values sorted descending, ties by ascending node index. Zeros are
/// omitted.
struct RankDistribution {
  int alpha = 1;
  /// Empty for neighborhood-size distributions.
  std::optional<Variant> variant;
  std::vector<RankEntry> entries;
};

RankDistribution rank_distribution(std::span<const double> values_by_node);
RankDistribution mn_size_distribution(const MultiLayerNetwork& net, int alpha);
RankDistribution cldc_distribution(const MultiLayerNetwork& net, int alpha, Variant variant,
                                   unsigned threads = 1);

/// Half-open bucket (lo, hi].
struct HistogramBucket {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::size_t count = 0;
};

struct HistogramReport {
  int alpha = 1;
  std::vector<HistogramBucket> buckets;

  std::size_t total() const;
};

/// Width-10 buckets over (0, 100], width-100 over (100, 1000], then width-1000
/// buckets up to the largest observed size. The nineteen buckets up to 1000 are always
/// present. Zero sizes are ignored.
HistogramReport three_tier_histogram(std::span<const std::uint64_t> sizes);
HistogramReport mn_histogram(const MultiLayerNetwork& net, int alpha);

struct OccupancyRow {
  int alpha = 1;
  std::size_t nonempty = 0;
  std::size_t empty = 0;
  double pct_nonempty = 0.0;
};

struct OccupancyReport {
  std::vector<OccupancyRow> rows;
};

/// Empty vs non-empty MN(x, alpha) over all m nodes; isolated nodes are empty.
OccupancyReport mn_occupancy(const MultiLayerNetwork& net, std::span<const int> alphas);
OccupancyReport occupancy_from_sweep(const AlphaSweep& sweep);

struct SummaryRow {
  int alpha = 1;
  /// Smallest positive score; 0 when no score is positive.
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

struct CldcSummary {
  Variant variant = Variant::total;
  std::vector<SummaryRow> rows;
};

CldcSummary cldc_summary(const MultiLayerNetwork& net, std::span<const int> alphas,
                         Variant variant, unsigned threads = 1);
CldcSummary summary_from_sweep(const AlphaSweep& sweep, Variant variant);

/// Least-squares line through (log10 rank, log10 value) of a rank
/// distribution. Slope and r_squared are NaN with fewer than two points.
struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

PowerLawFit fit_rank_size(std::span<const double> descending_values);
PowerLawFit fit_rank_size(const RankDistribution& distribution);

/// Parses "3", "1,2,5" or ranges such as "1-10" and "1-3,7".
std::vector<int> parse_alpha_list(std::string_view text);

}  // namespace msn
