#include "msn/report.hpp"

#include <algorithm>
#include <ostream>

#include "msn/io.hpp"

namespace msn {

using nlohmann::json;

namespace {

// RFC 4180 quoting for labels that contain separators or quotes.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

void write_csv(std::ostream& out, const MultiLayerNetwork& net, const RankDistribution& dist) {
  out << "rank,node,value\n";
  std::size_t rank = 1;
  for (const auto& e : dist.entries) {
    out << rank++ << ',' << csv_field(net.node_label(e.node)) << ',' << format_shortest(e.value) << '\n';
  }
}

void write_csv(std::ostream& out, const HistogramReport& report) {
  out << "bucket_lo,bucket_hi,count\n";
  for (const auto& b : report.buckets) {
    out << b.lo << ',' << b.hi << ',' << b.count << '\n';
  }
}

void write_csv(std::ostream& out, const OccupancyReport& report) {
  out << "alpha,nonempty,empty,pct_nonempty\n";
  for (const auto& r : report.rows) {
    out << r.alpha << ',' << r.nonempty << ',' << r.empty << ',' << format_shortest(r.pct_nonempty)
        << '\n';
  }
}

void write_csv(std::ostream& out, const CldcSummary& summary) {
  out << "alpha,min,max,count\n";
  for (const auto& r : summary.rows) {
    out << r.alpha << ',' << format_shortest(r.min) << ',' << format_shortest(r.max) << ','
        << r.count << '\n';
  }
}

void write_csv(std::ostream& out, const LayerStatsTable& table) {
  out << "layer,edges,active_nodes\n";
  for (const auto& r : table.rows) {
    out << csv_field(r.layer) << ',' << r.edges << ',' << r.active_nodes << '\n';
  }
  out << "SUM," << table.total_edges << ',' << table.total_layer_active << '\n';
}

json to_json(const MultiLayerNetwork& net, const RankDistribution& dist) {
  json rows = json::array();
  std::size_t rank = 1;
  for (const auto& e : dist.entries) {
    rows.push_back({{"rank", rank++}, {"node", net.node_label(e.node)}, {"value", e.value}});
  }
  json doc{{"alpha", dist.alpha}, {"kind", dist.variant ? "cldc" : "mn"}, {"rows", rows}};
  if (dist.variant) {
    doc["variant"] = std::string(variant_name(*dist.variant));
  }
  return doc;
}

json to_json(const HistogramReport& report) {
  json rows = json::array();
  for (const auto& b : report.buckets) {
    rows.push_back({{"bucket_lo", b.lo}, {"bucket_hi", b.hi}, {"count", b.count}});
  }
  return {{"alpha", report.alpha}, {"rows", rows}};
}

json to_json(const OccupancyReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"alpha", r.alpha},
                    {"nonempty", r.nonempty},
                    {"empty", r.empty},
                    {"pct_nonempty", r.pct_nonempty}});
  }
  return {{"rows", rows}};
}

json to_json(const CldcSummary& summary) {
  json rows = json::array();
  for (const auto& r : summary.rows) {
    rows.push_back({{"alpha", r.alpha}, {"min", r.min}, {"max", r.max}, {"count", r.count}});
  }
  return {{"variant", std::string(variant_name(summary.variant))}, {"rows", rows}};
}

json to_json(const LayerStatsTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"layer", r.layer}, {"edges", r.edges}, {"active_nodes", r.active_nodes}});
  }
  return {{"nodes", table.nodes},
          {"total_edges", table.total_edges},
          {"total_layer_active", table.total_layer_active},
          {"distinct_active", table.distinct_active},
          {"rows", rows}};
}

std::vector<std::pair<NodeId, double>> ranked_scores(const MultiLayerNetwork& net,
                                                     std::span<const double> scores) {
  std::vector<std::pair<NodeId, double>> ranked;
  ranked.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    ranked.emplace_back(NodeId{static_cast<std::uint32_t>(i)}, scores[i]);
  }
  const auto labels = net.node_labels();
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) {
      return a.second > b.second;
    }
    return labels[a.first.value] < labels[b.first.value];
  });
  return ranked;
}

void write_scores_csv(std::ostream& out, const MultiLayerNetwork& net,
                      std::span<const std::pair<NodeId, double>> ranked) {
  out << "node,score\n";
  for (const auto& [node, score] : ranked) {
    out << csv_field(net.node_label(node)) << ',' << format_shortest(score) << '\n';
  }
}

}  // namespace msn
