#include "msn/analytics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "msn/error.hpp"
#include "msn/neighborhood.hpp"

namespace msn {

LayerStatsTable layer_stats(const MultiLayerNetwork& net) {
  LayerStatsTable table;
  table.nodes = net.node_count();
  table.total_edges = net.edge_count();
  std::vector<std::uint32_t> last_seen(net.node_count(), std::numeric_limits<std::uint32_t>::max());
  std::vector<bool> any(net.node_count(), false);
  for (std::uint32_t l = 0; l < net.layer_count(); ++l) {
    const LayerId layer{l};
    LayerStatsRow row{net.layer_label(layer), 0, 0};
    for (const Edge& e : net.layer_edges(layer)) {
      ++row.edges;
      for (NodeId v : {e.source, e.target}) {
        if (last_seen[v.value] != l) {
          last_seen[v.value] = l;
          ++row.active_nodes;
        }
        any[v.value] = true;
      }
    }
    table.total_layer_active += row.active_nodes;
    table.rows.push_back(std::move(row));
  }
  table.distinct_active = static_cast<std::size_t>(std::count(any.begin(), any.end(), true));
  return table;
}

RankDistribution rank_distribution(std::span<const double> values_by_node) {
  RankDistribution dist;
  for (std::size_t i = 0; i < values_by_node.size(); ++i) {
    if (values_by_node[i] > 0.0) {
      dist.entries.push_back(RankEntry{NodeId{static_cast<std::uint32_t>(i)}, values_by_node[i]});
    }
  }
  std::sort(dist.entries.begin(), dist.entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.value != b.value) {
      return a.value > b.value;
    }
    return a.node < b.node;
  });
  return dist;
}

namespace {

std::vector<std::uint64_t> mn_sizes(const MultiLayerNetwork& net, int alpha) {
  check_alpha(net, alpha);
  const auto threshold = static_cast<std::uint32_t>(alpha);
  std::vector<std::uint64_t> sizes(net.node_count(), 0);
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    for_each_neighbor(net, NodeId{i}, [&](const NeighborGroup& g) {
      if (g.support >= threshold) {
        ++sizes[i];
      }
    });
  }
  return sizes;
}

}  // namespace

RankDistribution mn_size_distribution(const MultiLayerNetwork& net, int alpha) {
  const auto sizes = mn_sizes(net, alpha);
  std::vector<double> values(sizes.begin(), sizes.end());
  auto dist = rank_distribution(values);
  dist.alpha = alpha;
  return dist;
}

RankDistribution cldc_distribution(const MultiLayerNetwork& net, int alpha, Variant variant,
                                   unsigned threads) {
  auto dist = rank_distribution(cldc_batch(net, alpha, variant, threads));
  dist.alpha = alpha;
  dist.variant = variant;
  return dist;
}

std::size_t HistogramReport::total() const {
  std::size_t sum = 0;
  for (const auto& b : buckets) {
    sum += b.count;
  }
  return sum;
}

HistogramReport three_tier_histogram(std::span<const std::uint64_t> sizes) {
  HistogramReport report;
  for (std::uint64_t lo = 0; lo < 100; lo += 10) {
    report.buckets.push_back({lo, lo + 10, 0});
  }
  for (std::uint64_t lo = 100; lo < 1000; lo += 100) {
    report.buckets.push_back({lo, lo + 100, 0});
  }
  const std::uint64_t largest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  for (std::uint64_t lo = 1000; lo < largest; lo += 1000) {
    report.buckets.push_back({lo, lo + 1000, 0});
  }
  for (std::uint64_t s : sizes) {
    if (s == 0) {
      continue;
    }
    std::size_t index;
    if (s <= 100) {
      index = static_cast<std::size_t>((s - 1) / 10);
    } else if (s <= 1000) {
      index = 10 + static_cast<std::size_t>((s - 101) / 100);
    } else {
      index = 19 + static_cast<std::size_t>((s - 1001) / 1000);
    }
    ++report.buckets[index].count;
  }
  return report;
}

HistogramReport mn_histogram(const MultiLayerNetwork& net, int alpha) {
  auto report = three_tier_histogram(mn_sizes(net, alpha));
  report.alpha = alpha;
  return report;
}

namespace {

OccupancyRow occupancy_row(int alpha, std::size_t nonempty, std::size_t m) {
  OccupancyRow row{alpha, nonempty, m - nonempty, 0.0};
  if (m > 0) {
    row.pct_nonempty = 100.0 * static_cast<double>(nonempty) / static_cast<double>(m);
  }
  return row;
}

}  // namespace

OccupancyReport mn_occupancy(const MultiLayerNetwork& net, std::span<const int> alphas) {
  for (int a : alphas) {
    check_alpha(net, a);
  }
  // MN(x, a) is non-empty iff a <= the largest layer support around x.
  std::vector<std::size_t> reaching(net.layer_count() + 2, 0);
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    ++reaching[max_layer_support(net, NodeId{i})];
  }
  // suffix sums: reaching[a] = #nodes with max support >= a
  for (std::size_t a = reaching.size() - 1; a-- > 0;) {
    reaching[a] += reaching[a + 1];
  }
  OccupancyReport report;
  for (int a : alphas) {
    report.rows.push_back(occupancy_row(a, reaching[static_cast<std::size_t>(a)], net.node_count()));
  }
  return report;
}

OccupancyReport occupancy_from_sweep(const AlphaSweep& sweep) {
  OccupancyReport report;
  for (const auto& s : sweep.slices) {
    const auto nonempty = static_cast<std::size_t>(
        std::count_if(s.mn_size.begin(), s.mn_size.end(), [](std::uint32_t n) { return n > 0; }));
    report.rows.push_back(occupancy_row(s.alpha, nonempty, s.mn_size.size()));
  }
  return report;
}

namespace {

SummaryRow summarize(int alpha, std::span<const double> scores) {
  SummaryRow row{alpha, 0.0, 0.0, 0};
  for (double v : scores) {
    if (v > 0.0) {
      row.min = row.count == 0 ? v : std::min(row.min, v);
      row.max = std::max(row.max, v);
      ++row.count;
    }
  }
  return row;
}

}  // namespace

CldcSummary cldc_summary(const MultiLayerNetwork& net, std::span<const int> alphas,
                         Variant variant, unsigned threads) {
  return summary_from_sweep(cldc_sweep(net, alphas, threads), variant);
}

CldcSummary summary_from_sweep(const AlphaSweep& sweep, Variant variant) {
  CldcSummary summary;
  summary.variant = variant;
  for (const auto& s : sweep.slices) {
    summary.rows.push_back(summarize(s.alpha, s.scores(variant)));
  }
  return summary;
}

PowerLawFit fit_rank_size(std::span<const double> descending_values) {
  PowerLawFit fit;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < descending_values.size(); ++i) {
    if (descending_values[i] > 0.0) {
      xs.push_back(std::log10(static_cast<double>(i + 1)));
      ys.push_back(std::log10(descending_values[i]));
    }
  }
  fit.points = xs.size();
  if (fit.points < 2) {
    fit.slope = fit.intercept = fit.r_squared = nan;
    return fit;
  }
  const double n = static_cast<double>(fit.points);
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  // A flat sequence is fit exactly by a horizontal line.
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

PowerLawFit fit_rank_size(const RankDistribution& distribution) {
  std::vector<double> values;
  values.reserve(distribution.entries.size());
  for (const auto& e : distribution.entries) {
    values.push_back(e.value);
  }
  return fit_rank_size(values);
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw AlphaOutOfRange("malformed alpha list '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_alpha_list(std::string_view text) {
  std::vector<int> alphas;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    // A leading '-' would be a negative number, not a range.
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      alphas.push_back(parse_int(item, text));
    } else {
      const int lo = parse_int(item.substr(0, dash), text);
      const int hi = parse_int(item.substr(dash + 1), text);
      if (hi < lo) {
        throw AlphaOutOfRange("empty alpha range '" + std::string(item) + "'");
      }
      for (int a = lo; a <= hi; ++a) {
        alphas.push_back(a);
      }
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return alphas;
}

}  // namespace msn
